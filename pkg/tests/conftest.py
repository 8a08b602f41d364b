from fractions import Fraction

from hypothesis import strategies as st

from symenk.algebra import QPolynomial, QRational

small_fractions = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@st.composite
def polynomials(draw, max_degree=4, laurent=False):
    low = draw(st.integers(-3, 0)) if laurent else 0
    coeffs = draw(st.lists(small_fractions, max_size=max_degree + 1))
    return QPolynomial({low + i: c for i, c in enumerate(coeffs)})


@st.composite
def rationals(draw):
    num = draw(polynomials())
    den = draw(polynomials(max_degree=3).filter(bool))
    return QRational(num, den)


def at(x, value=Fraction(3, 7)):
    """Evaluate a QPolynomial or QRational at a rational point."""
    return x(value)
