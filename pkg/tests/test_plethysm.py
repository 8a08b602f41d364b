from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from symenk.algebra import ONE, ZERO, QPolynomial, QRational, ZPoly, z_pochhammer
from symenk.partitions import partitions_of
from symenk.plethysm import (AlphabetFactor, FiniteAlphabet, Letter, cauchy_en,
                             omega_truncated, pleth_finite, pleth_scale)
from symenk.symfun import from_schur, p, schur
from tests.test_symfun import evaluate

ONE_MINUS_Z = FiniteAlphabet.one_minus_z()


def hook_value(k):
    sign = QRational((-1) ** k)
    return ZPoly([ZERO] * k + [sign, -sign])


def test_powersum_at_one_minus_z():
    assert pleth_finite(p(3), ONE_MINUS_Z) == ZPoly([ONE, ZERO, ZERO, -ONE])


def test_small_schur_values_at_one_minus_z():
    assert pleth_finite(schur((2, 1)), ONE_MINUS_Z) == ZPoly([ZERO, -ONE, ONE])
    assert not pleth_finite(schur((2, 2)), ONE_MINUS_Z)


@pytest.mark.parametrize("n", range(1, 9))
def test_schur_at_one_minus_z(n):
    for mu in partitions_of(n):
        expected = hook_value(len(mu) - 1) if mu.is_hook() else ZERO
        assert pleth_finite(schur(mu), ONE_MINUS_Z) == expected


@pytest.mark.parametrize("lam", [lam for n in range(1, 6) for lam in partitions_of(n)])
def test_q_integer_alphabet_is_principal_specialisation(lam):
    t = Fraction(2, 5)
    value = pleth_finite(schur(lam), FiniteAlphabet.q_integer(3))
    assert value(t) == evaluate(schur(lam), (Fraction(1), t, t * t))


def test_one_minus_q_undoes_one_over_one_minus_q():
    for lam in partitions_of(5):
        f = pleth_scale(schur(lam), AlphabetFactor.one_over_one_minus_q())
        assert pleth_scale(f, AlphabetFactor.one_minus_q()) == schur(lam)


def test_negated_alphabet_flips_powersums():
    a = FiniteAlphabet.q_integer(2)
    for k in range(1, 5):
        assert (-a).power(k) == -a.power(k)


@pytest.mark.parametrize("m", range(0, 9))
def test_omega_of_q_integer(m):
    assert omega_truncated(FiniteAlphabet.q_integer(m), m + 2) == z_pochhammer(m)


alphabets = st.lists(st.tuples(st.sampled_from((1, -1)), st.integers(0, 3)), max_size=4).map(
    lambda xs: FiniteAlphabet([Letter(s, e) for s, e in xs]))


@given(alphabets, alphabets)
@settings(max_examples=30, deadline=None)
def test_omega_is_multiplicative_over_alphabet_sums(a, b):
    N = 5
    lhs = omega_truncated(a + b, N)
    rhs = (omega_truncated(a, N) * omega_truncated(b, N)).truncate(N)
    assert lhs == rhs


schur3 = st.dictionaries(st.sampled_from(partitions_of(3)),
                         st.integers(-3, 3).map(Fraction), max_size=3)


@given(schur3, schur3, alphabets)
@settings(max_examples=30, deadline=None)
def test_plethysm_is_a_ring_homomorphism(a, b, alphabet):
    f, g = from_schur(3, a), from_schur(3, b)
    assert pleth_finite(f * g, alphabet) == pleth_finite(f, alphabet) * pleth_finite(g, alphabet)
    assert pleth_finite(f + g, alphabet) == pleth_finite(f, alphabet) + pleth_finite(g, alphabet)
    scale = AlphabetFactor.one_over_one_minus_q()
    assert pleth_scale(f * g, scale) == pleth_scale(f, scale) * pleth_scale(g, scale)


@pytest.mark.parametrize("n", range(1, 6))
def test_cauchy_identity_with_one_minus_z_over_one_minus_q(n):
    cauchy_en(AlphabetFactor.one_minus_z_over_one_minus_q(), n)


def test_rational_factor_substitutes_q_to_the_k():
    f = AlphabetFactor.rational_in_q(QRational(QPolynomial({1: 1}), QPolynomial({0: 1, 1: -1})))
    assert f.power(3) == QRational(QPolynomial({3: 1}), QPolynomial({0: 1, 3: -1}))


def test_bad_letter_rejected():
    with pytest.raises(ValueError):
        FiniteAlphabet([Letter(2, 0)])


def test_scaling_examples():
    one_over = AlphabetFactor.one_over_one_minus_q()
    q = QPolynomial.monomial(1)
    assert pleth_scale(p(2), one_over) == p(2).scale(QRational(1, 1 - q ** 2))
    assert pleth_scale(schur((3, 1)), AlphabetFactor.rational_in_q(1)) == schur((3, 1))


def test_vanishing_multiplier_denominator():
    with pytest.raises(ZeroDivisionError):
        pleth_scale(p(1), AlphabetFactor(lambda k: QRational(1, QPolynomial())))


def test_omega_small_alphabets():
    assert omega_truncated(FiniteAlphabet.q_integer(1), 3) == ZPoly([ONE, -ONE])
    assert omega_truncated(FiniteAlphabet.q_integer(2), 4) == z_pochhammer(2)


def test_cauchy_trivial_alphabets():
    from symenk.symfun import e

    assert cauchy_en(FiniteAlphabet([Letter(1)]), 4) == e(4)
    assert cauchy_en(ONE_MINUS_Z, 3) == pleth_scale(e(3), ONE_MINUS_Z)


def test_two_orders_of_evaluation_for_e2():
    from symenk.symfun import e, split_z

    widened = split_z(pleth_scale(e(2), AlphabetFactor.one_minus_z_over_one_minus_q()))
    # Newton: e_2 = (p_1^2 - p_2)/2 with p_k -> p_k (1 - z^k)/(1 - q^k)
    q = QPolynomial.monomial(1)
    a1 = QRational(1, 1 - q)
    a2 = QRational(1, 1 - q ** 2)
    p11, p2 = schur((1,)) * schur((1,)), p(2)
    half = Fraction(1, 2)
    expected = [p11.scale(a1 * a1 * half) - p2.scale(a2 * half),
                p11.scale(-a1 * a1),
                p11.scale(a1 * a1 * half) + p2.scale(a2 * half)]
    assert list(widened.coeffs) == expected
