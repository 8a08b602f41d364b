"""Exact scalar arithmetic over Q, Q[q, q^-1], Q[q, t], Q(q) and polynomials in z.

Everything here is immutable.  Coefficients are :class:`fractions.Fraction`.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

Rational = Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"cannot use {type(x).__name__} as a rational")


class QPolynomial:
    """Laurent polynomial in q with rational coefficients.

    Stored densely: ``coeffs[i]`` is the coefficient of ``q**(low + i)``.
    Both ends of ``coeffs`` are nonzero; the zero polynomial has no coeffs.
    """

    __slots__ = ("low", "coeffs", "_hash")

    def __init__(self, terms: Mapping[int, object] | None = None):
        if not terms:
            low, coeffs = 0, ()
        else:
            lo, hi = min(terms), max(terms)
            dense = [_ZERO] * (hi - lo + 1)
            for e, c in terms.items():
                dense[e - lo] += _as_fraction(c)
            low, coeffs = _trim(lo, dense)
        self.low = low
        self.coeffs = coeffs
        self._hash = None

    @classmethod
    def _make(cls, low: int, coeffs) -> "QPolynomial":
        low, coeffs = _trim(low, coeffs)
        obj = cls.__new__(cls)
        obj.low = low
        obj.coeffs = coeffs
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, c) -> "QPolynomial":
        return cls._make(0, (_as_fraction(c),))

    @classmethod
    def monomial(cls, exp: int, c=1) -> "QPolynomial":
        return cls._make(exp, (_as_fraction(c),))

    @classmethod
    def from_coeffs(cls, coeffs: Iterable, low: int = 0) -> "QPolynomial":
        """Build from an ascending coefficient list starting at ``q**low``."""
        return cls._make(low, [_as_fraction(c) for c in coeffs])

    @property
    def terms(self) -> dict[int, Fraction]:
        return {self.low + i: c for i, c in enumerate(self.coeffs) if c}

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    @property
    def degree(self) -> int:
        if not self.coeffs:
            raise ValueError("degree of the zero polynomial")
        return self.low + len(self.coeffs) - 1

    @property
    def valuation(self) -> int:
        if not self.coeffs:
            raise ValueError("valuation of the zero polynomial")
        return self.low

    @property
    def leading_coefficient(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else _ZERO

    def is_laurent(self) -> bool:
        return bool(self.coeffs) and self.low < 0

    def is_constant(self) -> bool:
        return not self.coeffs or (self.low == 0 and len(self.coeffs) == 1)

    def coefficient(self, exp: int) -> Fraction:
        i = exp - self.low
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return _ZERO

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, QPolynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return QPolynomial.constant(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o.coeffs:
            return self
        if not self.coeffs:
            return o
        lo = min(self.low, o.low)
        hi = max(self.low + len(self.coeffs), o.low + len(o.coeffs))
        out = [_ZERO] * (hi - lo)
        for i, c in enumerate(self.coeffs):
            out[self.low - lo + i] += c
        for i, c in enumerate(o.coeffs):
            out[o.low - lo + i] += c
        return QPolynomial._make(lo, out)

    __radd__ = __add__

    def __neg__(self):
        return QPolynomial._make(self.low, [-c for c in self.coeffs])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return QPolynomial()
            return QPolynomial._make(self.low, [c * other for c in self.coeffs])
        if not isinstance(other, QPolynomial):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return QPolynomial()
        if len(b) == 1:
            b0 = b[0]
            return QPolynomial._make(self.low + other.low, [c * b0 for c in a])
        if len(a) == 1:
            a0 = a[0]
            return QPolynomial._make(self.low + other.low, [a0 * c for c in b])
        out = [_ZERO] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return QPolynomial._make(self.low + other.low, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self.coeffs) != 1:
                raise ValueError("negative power of a non-monomial")
            return QPolynomial.monomial(self.low * k, self.coeffs[0] ** k)
        result = QPolynomial.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def shift(self, k: int) -> "QPolynomial":
        """Multiply by ``q**k``."""
        if not self.coeffs:
            return self
        return QPolynomial._make(self.low + k, self.coeffs)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.low == o.low and self.coeffs == o.coeffs if self.coeffs else not o.coeffs

    def __hash__(self):
        if self._hash is None:
            if self.is_constant():
                self._hash = hash(self.coeffs[0] if self.coeffs else _ZERO)
            else:
                self._hash = hash((self.low, self.coeffs))
        return self._hash

    def __call__(self, x):
        """Evaluate at ``x`` (Horner)."""
        acc = _ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        if self.low:
            acc = acc * Fraction(x) ** self.low
        return acc

    evaluate = __call__

    def subs_power(self, k: int) -> "QPolynomial":
        """Substitute ``q -> q**k`` for ``k >= 1``."""
        if k == 1 or not self.coeffs:
            return self
        out = [_ZERO] * ((len(self.coeffs) - 1) * k + 1)
        for i, c in enumerate(self.coeffs):
            out[i * k] = c
        return QPolynomial._make(self.low * k, out)

    def __repr__(self):
        return f"QPolynomial({format_qpoly(self)!r})"

    def __str__(self):
        return format_qpoly(self)


def _trim(low: int, coeffs) -> tuple[int, tuple]:
    start = 0
    end = len(coeffs)
    while start < end and not coeffs[start]:
        start += 1
    while end > start and not coeffs[end - 1]:
        end -= 1
    if start == end:
        return 0, ()
    return low + start, tuple(coeffs[start:end])


def format_qpoly(p: QPolynomial, var: str = "q") -> str:
    """Ascending plain-text rendering, e.g. ``1 - q + 2*q^3``."""
    if not p.coeffs:
        return "0"
    parts = []
    for e, c in sorted(p.terms.items()):
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if e == 0:
            body = str(a)
        else:
            mono = var if e == 1 else f"{var}^{e}"
            body = mono if a == 1 else f"{a}*{mono}"
        parts.append((sign, body))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


# -- polynomial division and gcd (nonnegative exponents only) ---------------


def poly_divmod(a: QPolynomial, b: QPolynomial) -> tuple[QPolynomial, QPolynomial]:
    if not b.coeffs:
        raise ZeroDivisionError("zero denominator")
    if a.is_laurent() or b.is_laurent():
        raise ValueError("divmod needs ordinary polynomials")
    # work on full ascending lists from q^0
    num = [_ZERO] * a.low + list(a.coeffs) if a.coeffs else []
    den = [_ZERO] * b.low + list(b.coeffs)
    db = len(den) - 1
    if len(num) - 1 < db:
        return QPolynomial(), a
    lead = den[-1]
    quot = [_ZERO] * (len(num) - db)
    for i in range(len(num) - 1, db - 1, -1):
        c = num[i]
        if not c:
            continue
        f = c / lead
        quot[i - db] = f
        base = i - db
        for j in range(db + 1):
            if den[j]:
                num[base + j] -= f * den[j]
    return QPolynomial._make(0, quot), QPolynomial._make(0, num[:db] if db else [])


def exact_div(a: QPolynomial, b: QPolynomial) -> QPolynomial:
    """Quotient ``a / b``, raising if ``b`` does not divide ``a`` (Laurent-aware)."""
    if not a.coeffs:
        return a
    if len(b.coeffs) == 1:
        inv = 1 / b.coeffs[0]
        return QPolynomial._make(a.low - b.low, [c * inv for c in a.coeffs])
    quot, rem = poly_divmod(a.shift(-a.low), b.shift(-b.low))
    if rem.coeffs:
        raise ArithmeticError("inexact polynomial division")
    return quot.shift(a.low - b.low)


def monic(p: QPolynomial) -> QPolynomial:
    if not p.coeffs:
        return p
    lc = p.coeffs[-1]
    if lc == 1:
        return p
    inv = 1 / lc
    return QPolynomial._make(p.low, [c * inv for c in p.coeffs])


def poly_gcd(a: QPolynomial, b: QPolynomial) -> QPolynomial:
    """Monic gcd over Q of two ordinary polynomials (monic Euclid)."""
    if not a.coeffs:
        return monic(b)
    if not b.coeffs:
        return monic(a)
    v = min(a.low, b.low)
    a = a.shift(-a.low)
    b = b.shift(-b.low)
    if len(a.coeffs) < len(b.coeffs):
        a, b = b, a
    while b.coeffs:
        if len(b.coeffs) == 1:
            a = QPolynomial.constant(1)
            break
        _, r = poly_divmod(a, b)
        a, b = b, monic(r)
    return monic(a).shift(v)


# -- bivariate --------------------------------------------------------------


class BiPolynomial:
    """Polynomial in q and t; ``terms`` maps ``(q_exp, t_exp)`` to a coefficient."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, int], object] | None = None):
        clean = {}
        for (i, j), c in (terms or {}).items():
            if i < 0 or j < 0:
                raise ValueError("BiPolynomial exponents must be nonnegative")
            c = _as_fraction(c)
            if c:
                clean[(i, j)] = clean.get((i, j), _ZERO) + c
        self.terms = {k: v for k, v in clean.items() if v}

    @classmethod
    def q(cls, e: int = 1):
        return cls({(e, 0): 1})

    @classmethod
    def t(cls, e: int = 1):
        return cls({(0, e): 1})

    def _coerce(self, other):
        if isinstance(other, BiPolynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return BiPolynomial({(0, 0): other})
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for k, c in o.terms.items():
            out[k] = out.get(k, _ZERO) + c
        return BiPolynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return BiPolynomial({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out: dict[tuple[int, int], Fraction] = {}
        for (i, j), c in self.terms.items():
            for (k, l), d in o.terms.items():
                key = (i + k, j + l)
                out[key] = out.get(key, _ZERO) + c * d
        return BiPolynomial(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def at_t0(self) -> QPolynomial:
        return QPolynomial({i: c for (i, j), c in self.terms.items() if j == 0})

    def at_q0(self) -> QPolynomial:
        """The t-polynomial left after setting q = 0 (returned in the variable slot q)."""
        return QPolynomial({j: c for (i, j), c in self.terms.items() if i == 0})

    def __repr__(self):
        if not self.terms:
            return "BiPolynomial(0)"
        body = " + ".join(f"{c}*q^{i}*t^{j}" for (i, j), c in sorted(self.terms.items()))
        return f"BiPolynomial({body})"


# -- rational functions in q --------------------------------------------------


class QRational:
    """Element of Q(q) in canonical form.

    ``num`` and ``den`` have nonnegative exponents, are coprime, and ``den``
    is monic, so equality is structural.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num=0, den=1):
        num = _to_qpoly(num)
        den = _to_qpoly(den)
        if not den.coeffs:
            raise ZeroDivisionError("zero denominator")
        n, d = _canonical(num, den)
        self.num = n
        self.den = d
        self._hash = None

    @classmethod
    def _raw(cls, num: QPolynomial, den: QPolynomial) -> "QRational":
        obj = cls.__new__(cls)
        obj.num = num
        obj.den = den
        obj._hash = None
        return obj

    @classmethod
    def q(cls, e: int = 1) -> "QRational":
        return cls(QPolynomial.monomial(e))

    def __bool__(self):
        return bool(self.num.coeffs)

    def is_zero(self) -> bool:
        return not self.num.coeffs

    def is_polynomial(self) -> bool:
        return self.den.is_constant()

    def as_laurent(self) -> QPolynomial | None:
        """Return the value as a Laurent polynomial when the denominator is a monomial."""
        if len(self.den.coeffs) != 1:
            return None
        return self.num.shift(-self.den.low)

    def _coerce(self, other):
        if isinstance(other, QRational):
            return other
        if isinstance(other, (int, Fraction)):
            return QRational._raw(QPolynomial.constant(other), _POLY_ONE)
        if isinstance(other, QPolynomial):
            return QRational(other)
        return None

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return self
            return QRational._raw(self.num + self.den * other, self.den)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o.num.coeffs:
            return self
        if not self.num.coeffs:
            return o
        if self.den == o.den:
            return _reduce(self.num + o.num, self.den)
        g = poly_gcd(self.den, o.den)
        if g.is_constant():
            return QRational._raw(self.num * o.den + o.num * self.den, self.den * o.den)
        sd = exact_div(self.den, g)
        od = exact_div(o.den, g)
        n = self.num * od + o.num * sd
        if not n.coeffs:
            return ZERO
        h = poly_gcd(n, g)
        if not h.is_constant():
            n = exact_div(n, h)
            g = exact_div(g, h)
        return _monic_den(n, sd * od * g)

    __radd__ = __add__

    def __neg__(self):
        return QRational._raw(-self.num, self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return ZERO
            return QRational._raw(self.num * other, self.den)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not self.num.coeffs or not o.num.coeffs:
            return ZERO
        g1 = poly_gcd(self.num, o.den)
        g2 = poly_gcd(o.num, self.den)
        n1 = self.num if g1.is_constant() else exact_div(self.num, g1)
        d2 = o.den if g1.is_constant() else exact_div(o.den, g1)
        n2 = o.num if g2.is_constant() else exact_div(o.num, g2)
        d1 = self.den if g2.is_constant() else exact_div(self.den, g2)
        return _monic_den(n1 * n2, d1 * d2)

    __rmul__ = __mul__

    def inverse(self) -> "QRational":
        if not self.num.coeffs:
            raise ZeroDivisionError("zero denominator")
        return _monic_den(self.den, self.num)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return QRational._raw(self.num ** k, self.den ** k)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        if self._hash is None:
            if self.den.is_constant():
                self._hash = hash(self.num)
            else:
                self._hash = hash((self.num, self.den))
        return self._hash

    def subs_power(self, k: int) -> "QRational":
        """Substitute ``q -> q**k`` (stays canonical for ``k >= 1``)."""
        return QRational._raw(self.num.subs_power(k), self.den.subs_power(k))

    def __call__(self, x):
        d = self.den(x)
        if not d:
            raise ZeroDivisionError("zero denominator")
        return self.num(x) / d

    evaluate = __call__

    def __repr__(self):
        return f"QRational({format_qrational(self)!r})"

    def __str__(self):
        return format_qrational(self)


def _to_qpoly(x) -> QPolynomial:
    if isinstance(x, QPolynomial):
        return x
    if isinstance(x, (int, Fraction)):
        return QPolynomial.constant(x)
    raise TypeError(f"cannot build a rational function from {type(x).__name__}")


def _monic_den(n: QPolynomial, d: QPolynomial) -> QRational:
    lc = d.coeffs[-1]
    if lc != 1:
        inv = 1 / lc
        n = n * inv
        d = QPolynomial._make(d.low, [c * inv for c in d.coeffs])
    return QRational._raw(n, d)


def _reduce(n: QPolynomial, d: QPolynomial) -> QRational:
    if not n.coeffs:
        return ZERO
    g = poly_gcd(n, d)
    if not g.is_constant():
        n = exact_div(n, g)
        d = exact_div(d, g)
    return _monic_den(n, d)


def _canonical(num: QPolynomial, den: QPolynomial) -> tuple[QPolynomial, QPolynomial]:
    if not num.coeffs:
        return QPolynomial(), _POLY_ONE
    # Laurent normalisation: push negative powers into the other side
    if num.low < 0:
        den = den.shift(-num.low)
        num = num.shift(-num.low)
    if den.low < 0:
        num = num.shift(-den.low)
        den = den.shift(-den.low)
    r = _reduce(num, den)
    return r.num, r.den


_POLY_ONE = QPolynomial.constant(1)
ZERO = QRational._raw(QPolynomial(), _POLY_ONE)
ONE = QRational._raw(_POLY_ONE, _POLY_ONE)


def format_qrational(r: QRational) -> str:
    if r.den.is_constant():
        return format_qpoly(r.num)
    num = format_qpoly(r.num)
    if len(r.num.terms) > 1:
        num = f"({num})"
    return f"{num}/({format_qpoly(r.den)})"


# -- polynomials in z --------------------------------------------------------


class ZPoly:
    """Polynomial in z over a commutative coefficient ring.

    ``coeffs[j]`` is the coefficient of ``z**j``.  Coefficients may be any
    ring elements that support ``+ - *`` and truthiness for zero testing
    (QRational for scalar use, SymFunc for :data:`ZPolySym` values).
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = list(coeffs)
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    def __bool__(self):
        return bool(self.coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, j: int):
        return self.coeffs[j] if 0 <= j < len(self.coeffs) else 0

    def __add__(self, other):
        if not isinstance(other, ZPoly):
            if isinstance(other, int) and other == 0:
                return self
            other = ZPoly((other,))
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for j, c in enumerate(b):
            out[j] = out[j] + c
        return ZPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return ZPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        if not isinstance(other, ZPoly):
            other = ZPoly((other,))
        return self + (-other)

    def __rsub__(self, other):
        return ZPoly((other,)) + (-self)

    def __mul__(self, other):
        if isinstance(other, ZPoly):
            a, b = self.coeffs, other.coeffs
            if not a or not b:
                return ZPoly()
            out = [None] * (len(a) + len(b) - 1)
            for i, x in enumerate(a):
                if not x:
                    continue
                for j, y in enumerate(b):
                    if not y:
                        continue
                    prod = x * y
                    out[i + j] = prod if out[i + j] is None else out[i + j] + prod
            return ZPoly([0 if c is None else c for c in out])
        return ZPoly([c * other for c in self.coeffs])

    def __rmul__(self, other):
        return ZPoly([other * c for c in self.coeffs])

    def map(self, fn) -> "ZPoly":
        return ZPoly([fn(c) for c in self.coeffs])

    def truncate(self, n: int) -> "ZPoly":
        return ZPoly(self.coeffs[: n + 1])

    def __eq__(self, other):
        if isinstance(other, ZPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, int) and other == 0:
            return not self.coeffs
        if len(self.coeffs) <= 1:
            return (self.coeffs[0] if self.coeffs else 0) == other
        return False

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"ZPoly({list(self.coeffs)!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for j, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if j == 0 else ("z" if j == 1 else f"z^{j}")
            parts.append(f"({c})*{mono}" if mono else f"({c})")
        return " + ".join(parts)


Z = ZPoly((ZERO, ONE))


def as_qrational(x) -> QRational:
    if isinstance(x, QRational):
        return x
    return QRational(x)


# -- q-series primitives ------------------------------------------------------


@lru_cache(maxsize=None)
def qq_pochhammer(k: int) -> QPolynomial:
    """(q;q)_k = (1-q)(1-q^2)...(1-q^k)."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k == 0:
        return _POLY_ONE
    return qq_pochhammer(k - 1) * QPolynomial({0: 1, k: -1})


@lru_cache(maxsize=None)
def z_pochhammer(k: int) -> ZPoly:
    """(z;q)_k = (1-z)(1-qz)...(1-q^(k-1) z) with QRational coefficients."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k == 0:
        return ZPoly((ONE,))
    factor = ZPoly((ONE, -QRational.q(k - 1)))
    return z_pochhammer(k - 1) * factor


@lru_cache(maxsize=None)
def q_binomial(k: int, r: int) -> QPolynomial:
    """Gaussian binomial [k choose r]_q; zero outside 0 <= r <= k.

    Built with q-Pascal, [k r] = [k-1 r-1] + q^r [k-1 r], to stay additive.
    """
    if k < 0 or r < 0 or r > k:
        return QPolynomial()
    if r == 0 or r == k:
        return _POLY_ONE
    return q_binomial(k - 1, r - 1) + q_binomial(k - 1, r).shift(r)


def binom2(i: int) -> int:
    return i * (i - 1) // 2


def cauchy_qbinom_rhs(k: int) -> ZPoly:
    """sum_r z^r q^binom(r,2) (-1)^r [k r]_q."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    coeffs = []
    for r in range(k + 1):
        c = q_binomial(k, r).shift(binom2(r)) * (-1) ** r
        coeffs.append(QRational(c))
    return ZPoly(coeffs)
