"""Integer partitions, French-convention diagram statistics and dominance order."""

from __future__ import annotations

import os
from functools import lru_cache
from typing import Iterator, NamedTuple

from .algebra import BiPolynomial, QPolynomial

DEFAULT_PARTITION_BOUND = int(os.environ.get("SYMENK_PARTITION_BOUND", "30"))


class Cell(NamedTuple):
    """A diagram cell; ``row`` 0 is the bottom row (French), both 0-based."""

    row: int
    col: int


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    >>> Partition((3, 1, 1)).conjugate()
    Partition(3, 1, 1)
    """

    __slots__ = ()

    def __new__(cls, parts=()):
        if isinstance(parts, Partition):
            return parts
        parts = tuple(int(p) for p in parts)
        for i, p in enumerate(parts):
            if p <= 0:
                raise ValueError(f"partition parts must be positive: {parts}")
            if i and parts[i - 1] < p:
                raise ValueError(f"partition parts must weakly decrease: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def _trusted(cls, parts) -> "Partition":
        return tuple.__new__(cls, parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse the textual form ``"3,1,1"``; the empty string is the empty partition."""
        text = text.strip()
        if not text:
            return cls(())
        try:
            parts = [int(x) for x in text.split(",")]
        except ValueError:
            raise ValueError(f"not a partition: {text!r}") from None
        return cls(parts)

    @classmethod
    def hook(cls, arm_length: int, height: int) -> "Partition":
        """The hook ``(arm_length, 1^(height-1))``."""
        return cls((arm_length,) + (1,) * (height - 1))

    def __str__(self):
        return ",".join(map(str, self))

    def __repr__(self):
        return f"Partition({', '.join(map(str, self))})"

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def multiplicities(self) -> dict[int, int]:
        m: dict[int, int] = {}
        for p in self:
            m[p] = m.get(p, 0) + 1
        return m

    def conjugate(self) -> "Partition":
        return _conjugate(self)

    def is_hook(self) -> bool:
        return len(self) == 0 or all(p == 1 for p in self[1:])

    def cells(self) -> Iterator[Cell]:
        for r, p in enumerate(self):
            for c in range(p):
                yield Cell(r, c)

    def _has_cell(self, s: Cell) -> bool:
        return 0 <= s.row < len(self) and 0 <= s.col < self[s.row]

    def _check(self, s) -> Cell:
        s = Cell(*s)
        if not self._has_cell(s):
            raise ValueError("cell not in partition")
        return s

    def arm(self, s) -> int:
        s = self._check(s)
        return self[s.row] - s.col - 1

    def leg(self, s) -> int:
        s = self._check(s)
        return self.conjugate()[s.col] - s.row - 1

    def coarm(self, s) -> int:
        return self._check(s).col

    def coleg(self, s) -> int:
        return self._check(s).row


@lru_cache(maxsize=4096)
def _conjugate(mu: Partition) -> Partition:
    if not mu:
        return mu
    return Partition._trusted(tuple(sum(1 for p in mu if p >= i) for i in range(1, mu[0] + 1)))


def conjugate(mu) -> Partition:
    return Partition(mu).conjugate()


def n_stat(mu) -> int:
    """n(mu) = sum (i-1) mu_i, cross-checked against the total leg length."""
    mu = Partition(mu)
    by_rows = sum(i * p for i, p in enumerate(mu))
    by_legs = sum(mu.leg(s) for s in mu.cells())
    if by_rows != by_legs:
        raise ArithmeticError(f"n(mu) formulas disagree for {mu}: {by_rows} != {by_legs}")
    return by_rows


def htilde(mu) -> BiPolynomial:
    """prod over cells of (q^arm - t^(leg+1))."""
    mu = Partition(mu)
    if not mu:
        raise ValueError("htilde needs a nonempty partition")
    out = BiPolynomial({(0, 0): 1})
    for s in mu.cells():
        out = out * (BiPolynomial.q(mu.arm(s)) - BiPolynomial.t(mu.leg(s) + 1))
    return out


def htilde_prime(mu) -> BiPolynomial:
    """prod over cells of (t^leg - q^(arm+1))."""
    mu = Partition(mu)
    if not mu:
        raise ValueError("htilde_prime needs a nonempty partition")
    out = BiPolynomial({(0, 0): 1})
    for s in mu.cells():
        out = out * (BiPolynomial.t(mu.leg(s)) - BiPolynomial.q(mu.arm(s) + 1))
    return out


@lru_cache(maxsize=None)
def htilde_product_t0(mu) -> QPolynomial:
    """h~_mu(q,0) h~'_mu(q,0) in the closed Laurent form

    (-q)^n q^(2 n(mu')) prod_{leg(s)=0} (1 - q^(-arm(s)-1)),

    checked against direct substitution t = 0.
    """
    mu = Partition(mu)
    if not mu:
        raise ValueError("htilde_product_t0 needs a nonempty partition")
    n = mu.size
    closed = QPolynomial.monomial(n + 2 * n_stat(mu.conjugate()), (-1) ** n)
    for s in mu.cells():
        if mu.leg(s) == 0:
            closed = closed * QPolynomial({0: 1, -mu.arm(s) - 1: -1})
    direct = htilde(mu).at_t0() * htilde_prime(mu).at_t0()
    if closed != direct:
        raise ArithmeticError(f"closed form of h~ h~' at t=0 disagrees for {mu}")
    return closed


# -- enumeration ------------------------------------------------------------


def _gen(n: int, largest: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _gen(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _partitions_cached(n: int) -> tuple[Partition, ...]:
    return tuple(Partition._trusted(p) for p in _gen(n, n))


def partitions_of(n: int, bound: int | None = None) -> tuple[Partition, ...]:
    """All partitions of ``n`` in reverse-lexicographic order."""
    bound = DEFAULT_PARTITION_BOUND if bound is None else bound
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > bound:
        raise ValueError(f"n={n} exceeds the partition bound {bound}")
    return _partitions_cached(n)


def par_with_max(n: int, r: int) -> tuple[Partition, ...]:
    """Partitions of ``n`` whose largest part is exactly ``r``."""
    if r < 1 or r > n:
        return ()
    return tuple(mu for mu in partitions_of(n) if mu[0] == r)


def dominance_geq(lam, mu) -> bool:
    lam, mu = Partition(lam), Partition(mu)
    if lam.size != mu.size:
        raise ValueError("dominance needs partitions of equal size")
    a = b = 0
    for i in range(max(len(lam), len(mu))):
        a += lam[i] if i < len(lam) else 0
        b += mu[i] if i < len(mu) else 0
        if a < b:
            return False
    return True
