"""Homogeneous symmetric functions stored in the power-sum basis.

Coefficients live in any commutative ring whose elements support ``+ - *``
with each other and with :class:`fractions.Fraction`, and test as falsy when
zero.  In practice that is ``Fraction``, :class:`QRational`, or a
:class:`ZPoly` over ``QRational``.
"""

from __future__ import annotations

import os
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterable, Mapping

from .algebra import ZPoly
from .partitions import Partition, partitions_of

DEFAULT_DEGREE_CAP = int(os.environ.get("SYMENK_DEGREE_CAP", "16"))

BASES = ("powersum", "schur", "elementary", "homogeneous", "monomial")


def _merge(a: tuple, b: tuple) -> Partition:
    if not a:
        return b
    if not b:
        return a
    return Partition._trusted(sorted(a + b, reverse=True))


class SymFunc:
    """A homogeneous symmetric function of a fixed degree.

    ``coeffs`` maps partitions of ``degree`` to nonzero coefficients of the
    corresponding power sums ``p_rho``.
    """

    __slots__ = ("degree", "coeffs")

    def __init__(self, degree: int, coeffs: Mapping | None = None):
        self.degree = degree
        clean = {}
        for rho, c in (coeffs or {}).items():
            rho = Partition(rho)
            if rho.size != degree:
                raise ValueError(f"{rho} is not a partition of {degree}")
            if c:
                clean[rho] = c
        self.coeffs = clean

    @classmethod
    def _raw(cls, degree: int, coeffs: dict) -> "SymFunc":
        obj = cls.__new__(cls)
        obj.degree = degree
        obj.coeffs = coeffs
        return obj

    @classmethod
    def one(cls) -> "SymFunc":
        return cls._raw(0, {Partition(()): Fraction(1)})

    @classmethod
    def zero(cls, degree: int) -> "SymFunc":
        return cls._raw(degree, {})

    @property
    def basis(self) -> str:
        return "powersum"

    def __bool__(self):
        return bool(self.coeffs)

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        if not isinstance(other, SymFunc):
            return NotImplemented
        if not other.coeffs:
            return self
        if not self.coeffs:
            return other
        if other.degree != self.degree:
            raise ValueError("cannot add symmetric functions of different degrees")
        out = dict(self.coeffs)
        for rho, c in other.coeffs.items():
            if rho in out:
                s = out[rho] + c
                if s:
                    out[rho] = s
                else:
                    del out[rho]
            else:
                out[rho] = c
        return SymFunc._raw(self.degree, out)

    __radd__ = __add__

    def __neg__(self):
        return SymFunc._raw(self.degree, {k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        if not isinstance(other, SymFunc):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, SymFunc):
            out: dict = {}
            for a, x in self.coeffs.items():
                for b, y in other.coeffs.items():
                    key = _merge(a, b)
                    v = x * y
                    out[key] = out[key] + v if key in out else v
            return SymFunc._raw(self.degree + other.degree, {k: v for k, v in out.items() if v})
        if isinstance(other, ZPoly):
            return NotImplemented
        return self.scale(other)

    def __rmul__(self, other):
        if isinstance(other, ZPoly):
            return NotImplemented
        return self.scale(other)

    def scale(self, c) -> "SymFunc":
        if not c:
            return SymFunc._raw(self.degree, {})
        out = {}
        for k, v in self.coeffs.items():
            w = v * c
            if w:
                out[k] = w
        return SymFunc._raw(self.degree, out)

    def map_coeffs(self, fn) -> "SymFunc":
        return SymFunc(self.degree, {k: fn(v) for k, v in self.coeffs.items()})

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.coeffs
        if not isinstance(other, SymFunc):
            return NotImplemented
        if not self.coeffs and not other.coeffs:
            return True
        return self.degree == other.degree and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.degree, frozenset(self.coeffs.items())))

    def coefficients(self, basis: str = "powersum") -> dict[Partition, object]:
        """Coefficients of ``self`` in one of :data:`BASES`."""
        if basis == "powersum":
            return dict(self.coeffs)
        if basis == "schur":
            return expand_in_schur(self)
        if basis == "monomial":
            return {lam: c for lam in partitions_of(self.degree)
                    if (c := hall_inner(self, h_mu(lam)))}
        if basis == "homogeneous":
            return {lam: c for lam in partitions_of(self.degree)
                    if (c := hall_inner(self, m_mu(lam)))}
        if basis == "elementary":
            w = omega(self)
            return {lam: c for lam in partitions_of(self.degree)
                    if (c := hall_inner(w, m_mu(lam)))}
        raise ValueError(f"unknown basis {basis!r}")

    @classmethod
    def from_basis(cls, degree: int, basis: str, coeffs: Mapping) -> "SymFunc":
        gen = {"powersum": p_mu, "schur": schur, "elementary": e_mu,
               "homogeneous": h_mu, "monomial": m_mu}.get(basis)
        if gen is None:
            raise ValueError(f"unknown basis {basis!r}")
        if basis == "powersum":
            return cls(degree, coeffs)
        out = cls.zero(degree)
        for lam, c in coeffs.items():
            lam = Partition(lam)
            if lam.size != degree:
                raise ValueError(f"{lam} is not a partition of {degree}")
            out = out + gen(lam).scale(c)
        return out

    def __repr__(self):
        if not self.coeffs:
            return f"SymFunc({self.degree}, 0)"
        body = " + ".join(f"({c})*p[{rho}]" for rho, c in sorted(self.coeffs.items(), reverse=True))
        return f"SymFunc({self.degree}, {body})"


def _check_degree(k: int):
    if k > DEFAULT_DEGREE_CAP:
        raise ValueError(f"degree {k} exceeds the degree cap {DEFAULT_DEGREE_CAP}")


# -- generators -----------------------------------------------------------------


def p(k: int) -> SymFunc:
    if k < 1:
        raise ValueError("p(k) needs k >= 1")
    return SymFunc._raw(k, {Partition._trusted((k,)): Fraction(1)})


def p_mu(mu) -> SymFunc:
    mu = Partition(mu)
    return SymFunc._raw(mu.size, {mu: Fraction(1)})


@lru_cache(maxsize=None)
def e(k: int) -> SymFunc:
    """Elementary e_k via Newton: k e_k = sum_i (-1)^(i-1) p_i e_(k-i)."""
    if k < 0:
        raise ValueError("e(k) needs k >= 0")
    _check_degree(k)
    if k == 0:
        return SymFunc.one()
    acc = SymFunc.zero(k)
    for i in range(1, k + 1):
        term = p(i) * e(k - i)
        acc = acc + (term if i % 2 else -term)
    return acc.scale(Fraction(1, k))


@lru_cache(maxsize=None)
def h(k: int) -> SymFunc:
    """Complete homogeneous h_k via Newton: k h_k = sum_i p_i h_(k-i)."""
    if k < 0:
        raise ValueError("h(k) needs k >= 0")
    _check_degree(k)
    if k == 0:
        return SymFunc.one()
    acc = SymFunc.zero(k)
    for i in range(1, k + 1):
        acc = acc + p(i) * h(k - i)
    return acc.scale(Fraction(1, k))


@lru_cache(maxsize=None)
def e_mu(mu) -> SymFunc:
    mu = Partition(mu)
    if len(mu) <= 1:
        return e(mu[0]) if mu else SymFunc.one()
    return e_mu(Partition._trusted(mu[:-1])) * e(mu[-1])


@lru_cache(maxsize=None)
def h_mu(mu) -> SymFunc:
    mu = Partition(mu)
    if len(mu) <= 1:
        return h(mu[0]) if mu else SymFunc.one()
    return h_mu(Partition._trusted(mu[:-1])) * h(mu[-1])


def z_lambda(mu) -> int:
    """z_mu = prod_i i^(m_i) m_i!."""
    out = 1
    for part, m in Partition(mu).multiplicities().items():
        out *= part ** m * factorial(m)
    return out


# -- Schur functions ---------------------------------------------------------------


def _jacobi_trudi_e(lam: Partition) -> dict[tuple, int]:
    """det(e_{lam'_i - i + j}) as a polynomial in the e_k (keys are e-partitions)."""
    conj = lam.conjugate()
    m = len(conj)
    # Laplace expansion row by row, memoised on the set of used columns
    layer: dict[int, dict[tuple, int]] = {0: {(): 1}}
    for i in range(m):
        nxt: dict[int, dict[tuple, int]] = {}
        for mask, poly in layer.items():
            for j in range(m):
                if mask >> j & 1:
                    continue
                k = conj[i] - i + j
                if k < 0:
                    continue
                sign = -1 if bin(mask >> (j + 1)).count("1") % 2 else 1
                target = nxt.setdefault(mask | 1 << j, {})
                for mono, c in poly.items():
                    key = tuple(sorted(mono + (k,), reverse=True)) if k else mono
                    target[key] = target.get(key, 0) + sign * c
        layer = nxt
    result = layer.get((1 << m) - 1, {})
    return {k: c for k, c in result.items() if c}


@lru_cache(maxsize=None)
def schur(lam) -> SymFunc:
    """Schur function from the dual Jacobi-Trudi determinant in elementary functions."""
    lam = Partition(lam)
    if not lam:
        return SymFunc.one()
    _check_degree(lam.size)
    out = SymFunc.zero(lam.size)
    for mono, c in _jacobi_trudi_e(lam).items():
        out = out + e_mu(Partition._trusted(mono)).scale(Fraction(c))
    return out


@lru_cache(maxsize=None)
def character_table(n: int) -> dict[Partition, dict[Partition, int]]:
    """chi[lam][rho] = z_rho * <p_rho coefficient of s_lam>, an integer."""
    table = {}
    for lam in partitions_of(n):
        row = {}
        for rho, c in schur(lam).coeffs.items():
            v = c * z_lambda(rho)
            if v.denominator != 1:
                raise ArithmeticError(f"non-integral character value at {lam}, {rho}")
            row[rho] = int(v)
        table[lam] = row
    return table


def hall_inner(f: SymFunc, g: SymFunc):
    """Hall inner product, <p_lam, p_mu> = z_lam delta."""
    if f.coeffs and g.coeffs and f.degree != g.degree:
        raise ValueError("hall_inner needs equal degrees")
    if len(g.coeffs) < len(f.coeffs):
        f, g = g, f
    acc = 0
    for rho, c in f.coeffs.items():
        d = g.coeffs.get(rho)
        if d:
            acc = acc + (c * d) * z_lambda(rho)
    return acc


def expand_in_schur(f: SymFunc) -> dict[Partition, object]:
    """Schur coefficients c_lam = <f, s_lam> (exact, zero entries dropped)."""
    if not f.coeffs:
        return {}
    out = {}
    for lam, row in character_table(f.degree).items():
        acc = 0
        for rho, c in f.coeffs.items():
            chi = row.get(rho)
            if chi:
                acc = acc + c * chi
        if acc:
            out[lam] = acc
    return out


def from_schur(degree: int, coeffs: Mapping) -> SymFunc:
    return SymFunc.from_basis(degree, "schur", coeffs)


def omega(f: SymFunc) -> SymFunc:
    """The involution p_k -> (-1)^(k-1) p_k."""
    out = {}
    for rho, c in f.coeffs.items():
        out[rho] = -c if (f.degree - len(rho)) % 2 else c
    return SymFunc._raw(f.degree, out)


@lru_cache(maxsize=None)
def m_mu(mu) -> SymFunc:
    """Monomial symmetric function, the Hall dual of the h basis."""
    mu = Partition(mu)
    n = mu.size
    parts = partitions_of(n)
    basis = _dual_to_h(n)
    return SymFunc(n, {rho: basis[mu][i] for i, rho in enumerate(parts) if basis[mu][i]})


@lru_cache(maxsize=None)
def _dual_to_h(n: int) -> dict[Partition, list[Fraction]]:
    # <h_lam, m_mu> = delta  means  (H Z) a_mu = e_mu, so a_mu is column mu of (H Z)^-1
    parts = partitions_of(n)
    hz = [[h_mu(lam).coeffs.get(rho, Fraction(0)) * z_lambda(rho) for rho in parts] for lam in parts]
    inv = _invert(hz)
    return {mu: [inv[i][k] for i in range(len(parts))] for k, mu in enumerate(parts)}


def _invert(mat: list[list[Fraction]]) -> list[list[Fraction]]:
    size = len(mat)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(size)] for i, row in enumerate(mat)]
    for col in range(size):
        pivot = next(r for r in range(col, size) if aug[r][col])
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(size):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[size:] for row in aug]


def split_z(f: SymFunc) -> ZPoly:
    """Turn a symmetric function with z-polynomial coefficients into a
    z-polynomial with symmetric-function coefficients."""
    top = -1
    for c in f.coeffs.values():
        if isinstance(c, ZPoly):
            top = max(top, c.degree)
        elif c:
            top = max(top, 0)
    layers: list[dict] = [{} for _ in range(top + 1)]
    for rho, c in f.coeffs.items():
        cs = c.coeffs if isinstance(c, ZPoly) else (c,)
        for j, v in enumerate(cs):
            if v:
                layers[j][rho] = v
    return ZPoly([SymFunc._raw(f.degree, layer) for layer in layers])


def join_z(poly: ZPoly, degree: int) -> SymFunc:
    """Inverse of :func:`split_z`."""
    out: dict = {}
    for j, g in enumerate(poly.coeffs):
        if not g:
            continue
        for rho, v in g.coeffs.items():
            out.setdefault(rho, [0] * len(poly.coeffs))[j] = v
    return SymFunc(degree, {rho: ZPoly(cs) for rho, cs in out.items()})


def linear_combination(terms: Iterable[tuple[object, SymFunc]], degree: int) -> SymFunc:
    acc = SymFunc.zero(degree)
    for c, f in terms:
        acc = acc + f.scale(c)
    return acc
