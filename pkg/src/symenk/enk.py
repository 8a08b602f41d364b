"""The family E_{n,k}, the hook transition matrix T and its inverse, and the
identities relating them to hook Schur functions and Hall-Littlewood functions.

Matrix indices are 1-based throughout so that ``T[k+1, r]`` reads as written.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .algebra import (ONE, ZERO, QPolynomial, QRational, ZPoly, binom2,
                      q_binomial, qq_pochhammer, z_pochhammer)
from .hall_littlewood import HL_BOUND, hall_littlewood_H, kostka_cocharge
from .partitions import Partition, htilde_product_t0, par_with_max, partitions_of
from .plethysm import AlphabetFactor, pleth_scale
from .symfun import SymFunc, e, expand_in_schur, p, schur, split_z

MATRIX_CAP = 12
NEWTON_CAP = 8
SCHUR_CAP = 8


class TransitionMatrix:
    """Upper-triangular n x n matrix of QRational entries, 1-based."""

    def __init__(self, n: int, entries: dict[tuple[int, int], QRational]):
        self.n = n
        self.entries = {k: v for k, v in entries.items() if v}
        for (i, j) in self.entries:
            if not (1 <= i <= n and 1 <= j <= n):
                raise IndexError(f"entry ({i}, {j}) outside a {n}x{n} matrix")
            if i > j:
                raise ValueError("transition matrices are upper triangular")

    def __getitem__(self, ij: tuple[int, int]) -> QRational:
        i, j = ij
        if not (1 <= i <= self.n and 1 <= j <= self.n):
            raise IndexError(f"entry ({i}, {j}) outside a {self.n}x{self.n} matrix")
        return self.entries.get((i, j), ZERO)

    def __matmul__(self, other: "TransitionMatrix") -> "TransitionMatrix":
        if other.n != self.n:
            raise ValueError("matrix sizes differ")
        n = self.n
        out = {}
        for i in range(1, n + 1):
            for j in range(i, n + 1):
                acc = ZERO
                for k in range(i, j + 1):
                    a, b = self.entries.get((i, k)), other.entries.get((k, j))
                    if a and b:
                        acc = acc + a * b
                out[(i, j)] = acc
        return TransitionMatrix(n, out)

    def is_identity(self) -> bool:
        return self.entries == {(i, i): ONE for i in range(1, self.n + 1)}

    def determinant(self) -> QRational:
        out = ONE
        for i in range(1, self.n + 1):
            out = out * self[i, i]
        return out

    def rows(self) -> list[list[QRational]]:
        return [[self[i, j] for j in range(1, self.n + 1)] for i in range(1, self.n + 1)]

    def __eq__(self, other):
        if not isinstance(other, TransitionMatrix):
            return NotImplemented
        return self.n == other.n and self.entries == other.entries

    def __repr__(self):
        return f"TransitionMatrix(n={self.n}, nonzero={len(self.entries)})"


def _check_n(n: int, cap: int, what: str):
    if not (1 <= n <= cap):
        raise ValueError(f"{what} needs 1 <= n <= {cap}, got {n}")


def t_entry(k_plus_1: int, r: int) -> QPolynomial:
    """T_{k+1,r} = (-1)^k sum_{i=0..k} (-1)^i q^binom(i,2) [r i]_q; zero below the diagonal."""
    k = k_plus_1 - 1
    if r < k_plus_1:
        return QPolynomial()
    acc = QPolynomial()
    for i in range(k + 1):
        acc = acc + q_binomial(r, i).shift(binom2(i)) * (-1) ** (i + k)
    return acc


@lru_cache(maxsize=None)
def t_matrix(n: int, cap: int = MATRIX_CAP) -> TransitionMatrix:
    _check_n(n, cap, "t_matrix")
    entries = {}
    for i in range(1, n + 1):
        for r in range(i, n + 1):
            entries[(i, r)] = QRational(t_entry(i, r))
        if entries[(i, i)] != QRational.q(binom2(i)):
            raise ArithmeticError(f"diagonal entry T[{i},{i}] is not q^binom({i},2)")
    return TransitionMatrix(n, entries)


def t_inverse_entry(k_plus_1: int, r: int) -> QRational:
    """(T^-1)_{k+1,r} = (-1)^(r-k-1) q^(-(k+1)(r-1)) T_{k+1,r}."""
    k = k_plus_1 - 1
    if r < k_plus_1:
        return ZERO
    sign = -1 if (r - k - 1) % 2 else 1
    return QRational(t_entry(k_plus_1, r).shift(-(k + 1) * (r - 1)) * sign)


@lru_cache(maxsize=None)
def t_inverse(n: int, cap: int = MATRIX_CAP) -> TransitionMatrix:
    _check_n(n, cap, "t_inverse")
    inv = TransitionMatrix(n, {(i, r): t_inverse_entry(i, r)
                               for i in range(1, n + 1) for r in range(i, n + 1)})
    if not (t_matrix(n, cap) @ inv).is_identity():
        raise ArithmeticError(f"T * T^-1 is not the identity for n={n}")
    return inv


# -- E_{n,k} ---------------------------------------------------------------------


@dataclass
class EnkFamily:
    """E_{n,1}, ..., E_{n,n}; ``members[k-1]`` is E_{n,k} (power-sum storage)."""

    n: int
    members: list[SymFunc]
    method: str = "newton"
    _schur: list | None = field(default=None, repr=False)

    def __getitem__(self, k: int) -> SymFunc:
        if not 1 <= k <= self.n:
            raise IndexError(k)
        return self.members[k - 1]

    def schur_expansions(self) -> list[dict[Partition, QRational]]:
        if self._schur is None:
            self._schur = [expand_in_schur(f) for f in self.members]
        return self._schur

    def same_as(self, other: "EnkFamily") -> bool:
        return self.n == other.n and all(a == b for a, b in zip(self.members, other.members))


def _qq(k: int) -> QRational:
    return QRational(qq_pochhammer(k))


def en_one_minus_z_over_one_minus_q(n: int) -> ZPoly:
    """e_n[X(1-z)/(1-q)] as a z-polynomial of symmetric functions."""
    return split_z(pleth_scale(e(n), AlphabetFactor.one_minus_z_over_one_minus_q()))


def newton_coordinates(F: ZPoly) -> list[SymFunc]:
    """Coefficients c_k with F = sum_k c_k (z;q)_k, by back-substitution from the top."""
    top = F.degree
    residual = list(F.coeffs)
    coords: list = [0] * (top + 1)
    for k in range(top, -1, -1):
        basis = z_pochhammer(k)
        lead = basis.coeffs[k]  # (-1)^k q^binom(k,2)
        ck = residual[k] * lead.inverse() if residual[k] else residual[k]
        coords[k] = ck
        if ck:
            for j in range(k + 1):
                if basis.coeffs[j]:
                    residual[j] = residual[j] - ck * basis.coeffs[j]
    if any(residual):
        raise ArithmeticError("Newton basis change left a residual")
    return coords


@lru_cache(maxsize=None)
def enk_via_newton(n: int, cap: int = NEWTON_CAP) -> EnkFamily:
    """Expand e_n[X(1-z)/(1-q)] in the (z;q)_k basis and rescale by (q;q)_k."""
    _check_n(n, cap, "enk_via_newton")
    F = en_one_minus_z_over_one_minus_q(n)
    coords = newton_coordinates(F)
    coords += [SymFunc.zero(n)] * (n + 1 - len(coords))
    if coords[0]:
        raise ArithmeticError("the (z;q)_0 coordinate of e_n[X(1-z)/(1-q)] is nonzero")
    members = [coords[k].scale(_qq(k)) if coords[k] else SymFunc.zero(n) for k in range(1, n + 1)]
    return EnkFamily(n, members, "newton")


def reconstruct_en(family: EnkFamily) -> ZPoly:
    """sum_k (z;q)_k E_{n,k} / (q;q)_k as a z-polynomial of symmetric functions."""
    acc = ZPoly()
    for k in range(1, family.n + 1):
        scaled = family[k].scale(_qq(k).inverse())
        acc = acc + ZPoly([scaled * c if c else SymFunc.zero(family.n) for c in z_pochhammer(k).coeffs])
    return acc


def hook_plethysms(n: int) -> list[SymFunc]:
    """S_k = s_{(k,1^(n-k))}[X/(1-q)] for k = 1..n."""
    factor = AlphabetFactor.one_over_one_minus_q()
    return [pleth_scale(schur(Partition.hook(k, n - k + 1)), factor) for k in range(1, n + 1)]


@lru_cache(maxsize=None)
def enk_via_schur(n: int, cap: int = SCHUR_CAP) -> EnkFamily:
    """E = T^-1 S with S the hook Schur plethysms, then E_{n,r} = (q;q)_r E_r."""
    _check_n(n, cap, "enk_via_schur")
    S = hook_plethysms(n)
    inv = t_inverse(n)
    members = []
    for r in range(1, n + 1):
        acc = SymFunc.zero(n)
        for j in range(r, n + 1):
            c = inv[r, j]
            if c:
                acc = acc + S[j - 1].scale(c)
        members.append(acc.scale(_qq(r)))
    return EnkFamily(n, members, "schur")


def enk_via_hall_littlewood(n: int, k: int) -> SymFunc:
    """(q;q)_k sum_{mu in Par(n,k)} H~_mu'(X;q) / (h~_mu(q,0) h~'_mu(q,0))."""
    if not (1 <= k <= n <= HL_BOUND):
        raise ValueError(f"enk_via_hall_littlewood needs 1 <= k <= n <= {HL_BOUND}")
    acc = SymFunc.zero(n)
    for mu in par_with_max(n, k):
        weight = QRational(htilde_product_t0(mu)).inverse()
        acc = acc + hall_littlewood_H(mu.conjugate()).scale(weight)
    return acc.scale(_qq(k))


def enk_family_via_hall_littlewood(n: int) -> EnkFamily:
    return EnkFamily(n, [enk_via_hall_littlewood(n, k) for k in range(1, n + 1)], "hall")


def enk_family(n: int, method: str = "newton") -> EnkFamily:
    if method == "newton":
        return enk_via_newton(n)
    if method == "schur":
        return enk_via_schur(n)
    if method == "hall":
        return enk_family_via_hall_littlewood(n)
    raise ValueError(f"unknown method {method!r}")


# -- identity checks -----------------------------------------------------------------


def schur_from_enk(n: int, family: EnkFamily | None = None) -> list[SymFunc]:
    """Right-hand sides sum_r T_{k+1,r} E_{n,r}/(q;q)_r for k = 0..n-1."""
    family = family or enk_via_newton(n)
    T = t_matrix(n)
    out = []
    for i in range(1, n + 1):
        acc = SymFunc.zero(n)
        for r in range(i, n + 1):
            acc = acc + family[r].scale(T[i, r] * _qq(r).inverse())
        out.append(acc)
    return out


def hook_schur_expansion_check(n: int) -> bool:
    """s_{(k+1,1^(n-k-1))}[X/(1-q)] = sum_r T_{k+1,r} E_{n,r}/(q;q)_r for every k."""
    return hook_plethysms(n) == schur_from_enk(n)


def powersum_sides(n: int, family: EnkFamily | None = None) -> tuple[SymFunc, SymFunc]:
    """Return (p_n, sum_r (1-q^n)/(1-q^r) E_{n,r})."""
    family = family or enk_via_newton(n)
    one_minus_qn = QRational(QPolynomial({0: 1, n: -1}))
    rhs = SymFunc.zero(n)
    for r in range(1, n + 1):
        rhs = rhs + family[r].scale(one_minus_qn / QRational(QPolynomial({0: 1, r: -1})))
    return p(n), rhs


def powersum_identity(n: int) -> bool:
    """(-1)^(n-1) p_n = sum_r (1-q^n)/(1-q^r) E_{n,r}.

    The sign is (-1)^(n-1): at n = 1 both E_{1,1} and the right side are p_1.
    """
    if not 1 <= n <= 10:
        raise ValueError(f"powersum_identity needs 1 <= n <= 10, got {n}")
    pn, rhs = powersum_sides(n, enk_via_newton(n, cap=10))
    return rhs == (pn if n % 2 else -pn)


def hook_powersum_bridge(n: int, plethystic: bool = False) -> tuple[SymFunc, SymFunc]:
    """Return (p_n, sum_{k=0}^{n-1} (-1)^k s_{(k+1,1^(n-k-1))}), optionally
    with both sides evaluated at X/(1-q) and the right side scaled by (1-q^n)."""
    acc = SymFunc.zero(n)
    for k in range(n):
        s = schur(Partition.hook(k + 1, n - k))
        acc = acc + (s if k % 2 == 0 else -s)
    if plethystic:
        acc = pleth_scale(acc, AlphabetFactor.one_over_one_minus_q()).scale(QRational(QPolynomial({0: 1, n: -1})))
    return p(n), acc


def schur_hall_expansion_sides(lam) -> tuple[SymFunc, SymFunc]:
    """s_lam[X/(1-q)] and sum_mu K~_{lam',mu'}(q) H~_mu'(X;q) / (h~_mu h~'_mu)(q,0)."""
    lam = Partition(lam)
    n = lam.size
    lhs = pleth_scale(schur(lam), AlphabetFactor.one_over_one_minus_q())
    rhs = SymFunc.zero(n)
    lam_c = lam.conjugate()
    for mu in partitions_of(n):
        mu_c = mu.conjugate()
        k = kostka_cocharge(lam_c, mu_c)
        if not k:
            continue
        weight = QRational(k) * QRational(htilde_product_t0(mu)).inverse()
        rhs = rhs + hall_littlewood_H(mu_c).scale(weight)
    return lhs, rhs


def schur_hall_expansion_check(lam) -> bool:
    lam = Partition(lam)
    if lam.size > HL_BOUND:
        raise ValueError(f"schur_hall_expansion_check needs |lam| <= {HL_BOUND}")
    lhs, rhs = schur_hall_expansion_sides(lam)
    return lhs == rhs


@dataclass
class TheoremMismatch:
    n: int
    k: int
    r: int
    mu: Partition
    t_value: QRational
    kostka_value: QPolynomial


def main_theorem_mismatches(n: int) -> list[TheoremMismatch]:
    """Compare T_{k,r} with K~_{(n-k+1,1^(k-1)), mu'}(q) for every mu in Par(n,r)."""
    if not 1 <= n <= HL_BOUND:
        raise ValueError(f"main_theorem_check needs 1 <= n <= {HL_BOUND}")
    T = t_matrix(n)
    bad = []
    for r in range(1, n + 1):
        for k in range(1, r + 1):
            lam = Partition.hook(n - k + 1, k)
            for mu in par_with_max(n, r):
                kv = kostka_cocharge(lam, mu.conjugate())
                if T[k, r] != QRational(kv):
                    bad.append(TheoremMismatch(n, k, r, mu, T[k, r], kv))
    return bad


def main_theorem_check(n: int) -> bool:
    return not main_theorem_mismatches(n)


def _rank_at(vectors: list[SymFunc], point: Fraction) -> int:
    """Rank over Q of the vectors specialised at q = point (a lower bound for the rank over Q(q))."""
    if not vectors:
        return 0
    keys = sorted({rho for v in vectors for rho in v.coeffs})
    rows = [[v.coeffs[rho](point) if rho in v.coeffs else Fraction(0) for rho in keys] for v in vectors]
    rank = 0
    for col in range(len(keys)):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][col]:
                f = rows[i][col] / rows[rank][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def span_rank_check(n: int, point: Fraction = Fraction(2)) -> bool:
    """det T = q^(sum binom(k,2)); E and the hook plethysms span the same n-dimensional space."""
    if not 1 <= n <= NEWTON_CAP:
        raise ValueError(f"span_rank_check needs 1 <= n <= {NEWTON_CAP}")
    T, inv = t_matrix(n), t_inverse(n)
    if T.determinant() != QRational.q(sum(binom2(k) for k in range(1, n + 1))):
        return False
    family = enk_via_newton(n)
    S = hook_plethysms(n)
    # S = T (E/(q;q)) and E/(q;q) = T^-1 S, entry by entry
    scaled = [family[r].scale(_qq(r).inverse()) for r in range(1, n + 1)]
    for i in range(1, n + 1):
        fwd = SymFunc.zero(n)
        back = SymFunc.zero(n)
        for j in range(i, n + 1):
            fwd = fwd + scaled[j - 1].scale(T[i, j])
        for j in range(i, n + 1):
            c = inv[i, j]
            if c:
                back = back + S[j - 1].scale(c)
        if fwd != S[i - 1] or back != scaled[i - 1]:
            return False
    return _rank_at(family.members, point) == n and _rank_at(S, point) == n
