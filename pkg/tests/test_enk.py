import pytest

from symenk.algebra import QPolynomial, QRational, q_binomial
from symenk.enk import (TransitionMatrix, en_one_minus_z_over_one_minus_q, enk_family,
                        enk_via_hall_littlewood, enk_via_newton, enk_via_schur,
                        hook_powersum_bridge, hook_schur_expansion_check, main_theorem_check,
                        main_theorem_mismatches, powersum_identity, powersum_sides,
                        reconstruct_en, schur_hall_expansion_check, span_rank_check,
                        t_entry, t_inverse, t_inverse_entry, t_matrix)
from symenk.partitions import Partition, partitions_of
from symenk.symfun import p, schur

q = QPolynomial.monomial(1)


def t_by_sum(k_plus_1, r):
    """(-1)^k sum_i (-1)^i q^binom(i,2) [r i]_q, straight from the definition."""
    k = k_plus_1 - 1
    acc = QPolynomial()
    for i in range(k + 1):
        acc = acc + q_binomial(r, i).shift(i * (i - 1) // 2) * (-1) ** (i + k)
    return acc


def test_entries_follow_the_alternating_sum():
    for r in range(1, 11):
        for k1 in range(1, r + 1):
            assert t_entry(k1, r) == t_by_sum(k1, r)


def test_diagonal_and_determinant():
    T = t_matrix(6)
    for r in range(1, 7):
        assert T[r, r] == QRational(q ** (r * (r - 1) // 2))
    assert T.determinant() == QRational(q ** sum(r * (r - 1) // 2 for r in range(1, 7)))


def test_inverse_closed_form_against_matrix_product():
    for n in range(1, 10):
        T, inv = t_matrix(n), t_inverse(n)
        assert (T @ inv).is_identity() and (inv @ T).is_identity()
    assert t_inverse_entry(1, 2) == QRational(-1, q)


def test_matrix_bounds():
    with pytest.raises(ValueError):
        t_matrix(0)
    with pytest.raises(ValueError):
        t_matrix(13)
    with pytest.raises(IndexError):
        t_matrix(3)[4, 1]
    with pytest.raises(ValueError):
        TransitionMatrix(2, {(2, 1): QRational(1)})


def test_first_family():
    assert enk_family(1)[1] == schur((1,))


@pytest.mark.parametrize("n", range(1, 6))
def test_routes_agree(n):
    newton = enk_via_newton(n)
    assert newton.same_as(enk_via_schur(n))
    for k in range(1, n + 1):
        assert enk_via_hall_littlewood(n, k) == newton[k]


@pytest.mark.parametrize("n", range(1, 6))
def test_reconstruction_and_hook_expansion(n):
    assert reconstruct_en(enk_via_newton(n)) == en_one_minus_z_over_one_minus_q(n)
    assert hook_schur_expansion_check(n)
    assert span_rank_check(n)


def test_enk_bounds():
    with pytest.raises(ValueError):
        enk_via_newton(9)
    with pytest.raises(ValueError):
        enk_family(3, "bogus")


@pytest.mark.parametrize("n", range(1, 6))
def test_powersum_sum_has_sign_n_minus_one(n):
    pn, rhs = powersum_sides(n)
    assert rhs == (-1) ** (n - 1) * pn
    assert rhs != (-1) ** n * pn
    assert powersum_identity(n)


@pytest.mark.parametrize("n", range(1, 6))
def test_hook_alternating_sum(n):
    pn, rhs = hook_powersum_bridge(n)
    assert rhs == (-1) ** (n - 1) * pn
    pn, rhs = hook_powersum_bridge(n, plethystic=True)
    assert rhs == (-1) ** (n - 1) * pn


def test_alternating_hook_sum_small_case():
    # s_2 - s_11 = p_2, so the alternating hook sum carries sign (-1)^(n-1) at n = 2
    assert schur((1, 1)) - schur((2,)) == -p(2)


@pytest.mark.parametrize("n", range(1, 6))
def test_theorem_holds(n):
    assert main_theorem_check(n)
    assert main_theorem_mismatches(n) == []


@pytest.mark.parametrize("lam", [lam for n in range(1, 5) for lam in partitions_of(n)])
def test_schur_expansion_in_hall_littlewood_basis(lam):
    assert schur_hall_expansion_check(lam)


def test_newton_route_rejects_constant_coordinate(monkeypatch):
    import symenk.enk as enk
    from symenk.algebra import ZPoly

    monkeypatch.setattr(enk, "en_one_minus_z_over_one_minus_q", lambda n: ZPoly([p(1), p(1)]))
    with pytest.raises(ArithmeticError):
        enk.enk_via_newton.__wrapped__(1)


def test_n2_routes_and_theorem_entries():
    T = t_matrix(2)
    assert T[2, 2] == QRational(q) and T[1, 2] == QRational(1)
    from symenk.hall_littlewood import kostka_cocharge

    assert kostka_cocharge((1, 1), (1, 1)) == q and kostka_cocharge((2,), (1, 1)) == 1
    for k in (1, 2):
        assert enk_via_hall_littlewood(2, k) == enk_via_schur(2)[k]


def test_named_entries():
    T, inv = t_matrix(5), t_inverse(5)
    assert T[3, 5] == QRational(q ** 3 * (q ** 4 + q ** 3 + 2 * q ** 2 + q + 1))
    assert all(T[1, r] == 1 for r in range(1, 6))
    assert inv[2, 3] == QRational(-(q + 1), q ** 3)
    assert T.determinant() == QRational(q ** 20)


def test_powersum_identity_to_10():
    for n in (9, 10):
        assert powersum_identity(n)
    with pytest.raises(ValueError):
        powersum_identity(11)


def test_hook_schur_expansion_in_hall_littlewood_basis_at_7():
    for k in range(7):
        assert schur_hall_expansion_check(Partition.hook(7 - k, k + 1))
