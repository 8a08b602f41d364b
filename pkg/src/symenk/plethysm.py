"""Plethystic substitution in the forms needed here.

An alphabet is anything with a ``power(k)`` method returning p_k evaluated at
it.  :class:`AlphabetFactor` covers rational scalings such as ``1/(1-q)`` and
``(1-z)/(1-q)``; :class:`FiniteAlphabet` covers signed sums of monomials such
as ``1 - z`` or ``1 + q + q^2``.  Both act on p_k, so both can serve as the
``Y`` in ``f[XY]`` or as a point of evaluation ``f[Y]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable

from .algebra import ONE, ZERO, QPolynomial, QRational, ZPoly, as_qrational
from .partitions import Partition, partitions_of
from .symfun import SymFunc, e, schur


class AlphabetFactor:
    """A multiplicative alphabet given by its p_k multipliers."""

    def __init__(self, multiplier: Callable[[int], object], label: str = "?"):
        self._multiplier = multiplier
        self._cache: dict[int, object] = {}
        self.label = label

    def power(self, k: int):
        if k not in self._cache:
            self._cache[k] = self._multiplier(k)
        return self._cache[k]

    multiplier = power

    @classmethod
    def rational_in_q(cls, r) -> "AlphabetFactor":
        """p_k -> r(q^k) p_k for a rational function r."""
        r = as_qrational(r)
        return cls(lambda k: r.subs_power(k), label=str(r))

    @classmethod
    def one_minus_z_over_one_minus_q(cls) -> "AlphabetFactor":
        def mult(k):
            c = QRational(1, QPolynomial({0: 1, k: -1}))
            return ZPoly([c] + [ZERO] * (k - 1) + [-c])

        return cls(mult, label="(1-z)/(1-q)")

    @classmethod
    def one_over_one_minus_q(cls) -> "AlphabetFactor":
        return cls.rational_in_q(QRational(1, QPolynomial({0: 1, 1: -1})))

    @classmethod
    def one_minus_q(cls) -> "AlphabetFactor":
        return cls.rational_in_q(QPolynomial({0: 1, 1: -1}))

    def __mul__(self, other: "AlphabetFactor") -> "AlphabetFactor":
        return AlphabetFactor(lambda k: self.power(k) * other.power(k),
                              label=f"({self.label})*({other.label})")

    def __add__(self, other: "AlphabetFactor") -> "AlphabetFactor":
        return AlphabetFactor(lambda k: self.power(k) + other.power(k),
                              label=f"({self.label})+({other.label})")

    def __repr__(self):
        return f"AlphabetFactor({self.label})"


@dataclass(frozen=True)
class Letter:
    sign: int
    q_exp: int = 0
    z_deg: int = 0


class FiniteAlphabet:
    """A signed sum of monomials ``q^a z^b`` with ``b`` in {0, 1}."""

    def __init__(self, letters: Iterable[Letter | tuple]):
        out = []
        for x in letters:
            x = x if isinstance(x, Letter) else Letter(*x)
            if x.sign not in (1, -1) or x.q_exp < 0 or x.z_deg not in (0, 1):
                raise ValueError(f"bad letter {x}")
            out.append(x)
        self.letters = tuple(out)

    @classmethod
    def one_minus_z(cls) -> "FiniteAlphabet":
        return cls([Letter(1), Letter(-1, 0, 1)])

    @classmethod
    def q_integer(cls, m: int) -> "FiniteAlphabet":
        """1 + q + ... + q^(m-1)."""
        return cls([Letter(1, i) for i in range(m)])

    def __add__(self, other: "FiniteAlphabet") -> "FiniteAlphabet":
        return FiniteAlphabet(self.letters + other.letters)

    def __neg__(self) -> "FiniteAlphabet":
        return FiniteAlphabet([Letter(-x.sign, x.q_exp, x.z_deg) for x in self.letters])

    def has_z(self) -> bool:
        return any(x.z_deg for x in self.letters)

    def power(self, k: int):
        """p_k at the alphabet: sum of sign * q^(k a) z^(k b)."""
        by_z: dict[int, dict[int, int]] = {}
        for x in self.letters:
            slot = by_z.setdefault(k * x.z_deg, {})
            slot[k * x.q_exp] = slot.get(k * x.q_exp, 0) + x.sign
        if not self.has_z():
            return QRational(QPolynomial(by_z.get(0, {})))
        top = max(by_z)
        return ZPoly([QRational(QPolynomial(by_z.get(j, {}))) for j in range(top + 1)])

    def __repr__(self):
        return f"FiniteAlphabet({list(self.letters)})"


def _power_product(alphabet, rho: Partition):
    out = ONE
    for part in rho:
        out = alphabet.power(part) * out
    return out


def pleth_scale(f: SymFunc, factor) -> SymFunc:
    """f[X * factor]: each p_rho picks up prod_i p_(rho_i)[factor]."""
    out = {}
    for rho, c in f.coeffs.items():
        mult = _power_product(factor, rho)
        if isinstance(mult, QRational) and mult.is_zero():
            continue
        v = mult * c if isinstance(mult, ZPoly) else c * mult
        if v:
            out[rho] = v
    return SymFunc._raw(f.degree, out)


def pleth_finite(f: SymFunc, alphabet):
    """f[A] as a scalar (QRational, or ZPoly over QRational when z is involved)."""
    acc = 0
    for rho, c in f.coeffs.items():
        mult = _power_product(alphabet, rho)
        acc = acc + (mult * c if isinstance(mult, ZPoly) else c * mult)
    if isinstance(acc, int):
        return ZERO
    if isinstance(acc, Fraction):
        return QRational(acc)
    return acc


def _as_zpoly(x) -> ZPoly:
    return x if isinstance(x, ZPoly) else ZPoly((as_qrational(x),))


def omega_truncated(alphabet: FiniteAlphabet, N: int) -> ZPoly:
    """Omega[-z A] = exp(sum_k p_k[-zA]/k) truncated at z^N.

    With z a letter, p_k[-zA] = -z^k p_k[A].
    """
    if N < 0:
        raise ValueError("truncation degree must be nonnegative")
    # L = sum_k -z^k p_k[A] / k, as a power series in z
    log = [ZERO] * (N + 1)
    for k in range(1, N + 1):
        pk = _as_zpoly(alphabet.power(k))
        for j, c in enumerate(pk.coeffs):
            deg = k + j
            if deg <= N and c:
                log[deg] = log[deg] - c * Fraction(1, k)
    # F = exp(L): n F_n = sum_{j=1..n} j L_j F_{n-j}
    out = [ONE] + [ZERO] * N
    for n in range(1, N + 1):
        acc = ZERO
        for j in range(1, n + 1):
            if log[j] and out[n - j]:
                acc = acc + log[j] * out[n - j] * j
        out[n] = acc * Fraction(1, n)
    return ZPoly(out)


def cauchy_en(factor, n: int):
    """e_n[XY] computed directly and as sum_mu s_mu[X] s_mu'[Y]; raises on mismatch."""
    if n < 1:
        raise ValueError("n must be >= 1")
    direct = pleth_scale(e(n), factor)
    cauchy = SymFunc.zero(n)
    for mu in partitions_of(n):
        y = pleth_finite(schur(mu.conjugate()), factor)
        if not y:
            continue
        cauchy = cauchy + schur(mu).scale(y)
    if direct != cauchy:
        raise ArithmeticError("Cauchy identity violated")
    return direct
