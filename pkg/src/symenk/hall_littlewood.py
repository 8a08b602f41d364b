"""Cocharge Kostka-Foulkes polynomials and cocharge Hall-Littlewood functions."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .algebra import QPolynomial, QRational, ZPoly, binom2, q_binomial, z_pochhammer
from .partitions import Partition, dominance_geq, n_stat, partitions_of
from .plethysm import AlphabetFactor, FiniteAlphabet, pleth_finite, pleth_scale
from .symfun import SymFunc, expand_in_schur, hall_inner, schur

HL_BOUND = 7


@dataclass(frozen=True)
class Tableau:
    """Semistandard tableau in French notation: ``rows[0]`` is the bottom row."""

    rows: tuple[tuple[int, ...], ...]

    @property
    def shape(self) -> Partition:
        return Partition(len(r) for r in self.rows)

    @property
    def content(self) -> tuple[int, ...]:
        counts: dict[int, int] = {}
        for r in self.rows:
            for x in r:
                counts[x] = counts.get(x, 0) + 1
        return tuple(counts.get(i, 0) for i in range(1, max(counts, default=0) + 1))

    def reading_word(self) -> tuple[int, ...]:
        """Rows from top to bottom, each read left to right."""
        return tuple(x for r in reversed(self.rows) for x in r)

    def is_semistandard(self) -> bool:
        for r in self.rows:
            if any(a > b for a, b in zip(r, r[1:])):
                return False
        for lower, upper in zip(self.rows, self.rows[1:]):
            if len(upper) > len(lower):
                return False
            if any(upper[c] <= lower[c] for c in range(len(upper))):
                return False
        return True


def enumerate_ssyt(shape, content) -> list[Tableau]:
    """All SSYT of ``shape`` with ``content`` (content[i] copies of the letter i+1)."""
    shape, content = Partition(shape), tuple(content)
    if shape.size != sum(content):
        raise ValueError("shape and content sizes differ")
    return list(_fill(shape, content))


def _fill(shape: Partition, content: tuple[int, ...]) -> Iterator[Tableau]:
    # Grow the shape one horizontal strip per letter: inner_i <= outer_i <= inner_(i-1).
    def strips(inner: tuple[int, ...], k: int, row: int, out: list[int]) -> Iterator[tuple[int, ...]]:
        if row == len(shape):
            if k == 0:
                yield tuple(out)
            return
        cur = inner[row]
        limit = shape[row] if row == 0 else min(shape[row], inner[row - 1])
        for add in range(min(k, limit - cur), -1, -1):
            out.append(cur + add)
            yield from strips(inner, k - add, row + 1, out)
            out.pop()

    def rec(letter: int, inner: tuple[int, ...], rows: tuple[tuple[int, ...], ...]) -> Iterator[Tableau]:
        if letter > len(content):
            if inner == tuple(shape):
                yield Tableau(rows)
            return
        for outer in strips(inner, content[letter - 1], 0, []):
            grown = tuple(r + (letter,) * (b - a) for r, a, b in zip(rows, inner, outer))
            yield from rec(letter + 1, outer, grown)

    yield from rec(1, (0,) * len(shape), ((),) * len(shape))


def _standard_subwords(word: tuple[int, ...]) -> list[list[int]]:
    """Positions of the successive standard subwords used by charge.

    Scan leftward from the right end for a 1, then continue leftward
    (cyclically) for a 2, and so on up to the largest remaining letter.
    """
    remaining = list(range(len(word)))
    result = []
    while remaining:
        letters = {word[i] for i in remaining}
        top = max(letters)
        if letters != set(range(1, top + 1)):
            raise ValueError("content is not a partition")
        chosen = []
        start = len(remaining) - 1
        for letter in range(1, top + 1):
            idx = start
            for _ in range(len(remaining)):
                if word[remaining[idx]] == letter and remaining[idx] not in chosen:
                    break
                idx = (idx - 1) % len(remaining)
            chosen.append(remaining[idx])
            start = idx
        result.append(sorted(chosen))
        chosen_set = set(chosen)
        remaining = [i for i in remaining if i not in chosen_set]
    return result


def _charge_standard(word: list[int]) -> int:
    pos = {x: i for i, x in enumerate(word)}
    index = total = 0
    for k in range(2, len(word) + 1):
        if pos[k] > pos[k - 1]:
            index += 1
        total += index
    return total


def charge_of_word(word: tuple[int, ...]) -> int:
    counts: dict[int, int] = {}
    for x in word:
        counts[x] = counts.get(x, 0) + 1
    top = max(counts, default=0)
    seq = [counts.get(i, 0) for i in range(1, top + 1)]
    if any(a < b for a, b in zip(seq, seq[1:])) or 0 in seq:
        raise ValueError("content is not a partition")
    return sum(_charge_standard([word[i] for i in sub]) for sub in _standard_subwords(word))


def cocharge(t: Tableau) -> int:
    """n(content) - charge(reading word)."""
    content = t.content
    if any(a < b for a, b in zip(content, content[1:])) or 0 in content:
        raise ValueError("content is not a partition")
    return n_stat(Partition(content)) - charge_of_word(t.reading_word())


@lru_cache(maxsize=None)
def _kostka_cocharge(lam: Partition, mu: Partition) -> QPolynomial:
    terms: dict[int, int] = {}
    for t in _fill(lam, tuple(mu)):
        c = cocharge(t)
        terms[c] = terms.get(c, 0) + 1
    return QPolynomial(terms)


def kostka_cocharge(lam, mu) -> QPolynomial:
    """K~_{lam,mu}(q) = sum over SSYT(lam, mu) of q^cocharge."""
    lam, mu = Partition(lam), Partition(mu)
    if lam.size != mu.size:
        raise ValueError("kostka_cocharge needs |lam| = |mu|")
    return _kostka_cocharge(lam, mu)


def kostka_hook(n: int, k: int, r: int) -> QPolynomial:
    """Closed form for K~_{(n-k,1^k), mu}(q) where mu has r parts:

    (-1)^k sum_{i=0..k} (-1)^i q^binom(i,2) [r i]_q.
    """
    if not (0 <= k <= n - 1) or not (1 <= r <= n):
        raise ValueError(f"kostka_hook parameters out of range: n={n}, k={k}, r={r}")
    acc = QPolynomial()
    for i in range(k + 1):
        acc = acc + q_binomial(r, i).shift(binom2(i)) * (-1) ** (i + k)
    if any(c < 0 or c.denominator != 1 for c in acc.coeffs) or acc.is_laurent():
        raise ArithmeticError(f"hook formula produced a non-N[q] value for n={n}, k={k}, r={r}")
    return acc


@lru_cache(maxsize=None)
def _hall_littlewood_H(mu: Partition) -> SymFunc:
    out = SymFunc.zero(mu.size)
    for lam in partitions_of(mu.size):
        k = kostka_cocharge(lam, mu)
        if k:
            out = out + schur(lam).scale(QRational(k))
    return out


def hall_littlewood_H(mu) -> SymFunc:
    """H~_mu(X;q) = sum_lam K~_{lam,mu}(q) s_lam."""
    mu = Partition(mu)
    if not mu:
        raise ValueError("hall_littlewood_H needs a nonempty partition")
    return _hall_littlewood_H(mu)


def hl_schur_coefficients(mu) -> dict[Partition, QPolynomial]:
    mu = Partition(mu)
    return {lam: k for lam in partitions_of(mu.size) if (k := kostka_cocharge(lam, mu))}


@dataclass
class AxiomReport:
    mu: Partition
    support: bool
    support_after_scaling: bool
    normalized: bool

    @property
    def ok(self) -> bool:
        return self.support and self.support_after_scaling and self.normalized


def validate_hl_axioms(mu) -> AxiomReport:
    """Check the three characterising properties of H~_mu(X;q)."""
    mu = Partition(mu)
    if mu.size > HL_BOUND:
        raise ValueError(f"validate_hl_axioms is bounded to |mu| <= {HL_BOUND}")
    H = hall_littlewood_H(mu)
    support = all(dominance_geq(lam, mu) for lam in expand_in_schur(H))
    scaled = pleth_scale(H, AlphabetFactor.one_minus_q())
    conj = mu.conjugate()
    support2 = all(dominance_geq(lam, conj) for lam in expand_in_schur(scaled))
    normalized = hall_inner(H, schur((mu.size,))) == 1
    return AxiomReport(mu, support, support2, normalized)


def hl_at_one_minus_z(mu) -> ZPoly:
    """H~_mu(X;q,0)[1-z] = H~_mu'(X;q)[1-z], checked against (z;q)_{mu_1}.

    The t = 0 specialisation of the modified Macdonald function is the
    cocharge Hall-Littlewood function of the conjugate shape.
    """
    mu = Partition(mu)
    if not mu:
        raise ValueError("hl_at_one_minus_z needs a nonempty partition")
    value = pleth_finite(hall_littlewood_H(mu.conjugate()), FiniteAlphabet.one_minus_z())
    if value != z_pochhammer(mu[0]):
        raise ArithmeticError(f"specialization mismatch at {mu}")
    return value
