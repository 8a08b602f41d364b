"""Uncorrected transcriptions of two matrix formulas, kept only so the
regression tests can confirm they disagree with the worked n = 5 matrices.
Nothing in the package imports this."""

from symenk.algebra import QPolynomial, QRational
from symenk.enk import t_entry


def uncorrected_inverse_entry(k_plus_1: int, r: int) -> QRational:
    # (-1)^(r-k) q^(-r(k+1)) T_{k+1,r}
    k = k_plus_1 - 1
    return QRational(t_entry(k_plus_1, r).shift(-r * (k + 1)) * (-1) ** (r - k))


def uncorrected_recursion_rhs(i_plus_1: int, k: int) -> QPolynomial:
    # T_{i+1,k-1} + q^i T_{i,k-1}
    i = i_plus_1 - 1
    return t_entry(i_plus_1, k - 1) + t_entry(i, k - 1).shift(i)


def corrected_recursion_rhs(i_plus_1: int, k: int) -> QPolynomial:
    # T_{i+1,k-1} + q^(k-1) T_{i,k-1}
    return t_entry(i_plus_1, k - 1) + t_entry(i_plus_1 - 1, k - 1).shift(k - 1)
