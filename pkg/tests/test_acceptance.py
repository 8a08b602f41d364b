"""Acceptance criteria, each at zero tolerance with a wall-clock limit.

Every test prints one PASS/FAIL line.  Run directly with
``python tests/test_acceptance.py`` for just the table.
"""

from __future__ import annotations

import time
from contextlib import contextmanager

import pytest

from symenk.algebra import QPolynomial, QRational, as_qrational, cauchy_qbinom_rhs, z_pochhammer
from symenk.enk import (en_one_minus_z_over_one_minus_q, enk_via_hall_littlewood,
                        enk_via_newton, enk_via_schur, hook_schur_expansion_check,
                        main_theorem_mismatches, powersum_sides, reconstruct_en,
                        schur_hall_expansion_check, t_inverse, t_inverse_entry, t_matrix)
from symenk.hall_littlewood import (hl_at_one_minus_z, kostka_cocharge, kostka_hook,
                                    validate_hl_axioms)
from symenk.partitions import Partition, par_with_max, partitions_of
from symenk.plethysm import FiniteAlphabet, pleth_finite
from symenk.symfun import schur

try:
    from tests.uncorrected_forms import (corrected_recursion_rhs, uncorrected_inverse_entry,
                                         uncorrected_recursion_rhs)
except ImportError:  # run as a script from tests/
    from uncorrected_forms import (corrected_recursion_rhs, uncorrected_inverse_entry,
                                   uncorrected_recursion_rhs)

q = QPolynomial.monomial(1)


def _r(num, den=1):
    return QRational(num, den)


# worked n = 5 matrices, entered by hand in factored form
T5 = [
    [1, 1, 1, 1, 1],
    [0, q, (q + 1) * q, (q ** 2 + q + 1) * q, (q ** 3 + q ** 2 + q + 1) * q],
    [0, 0, q ** 3, q ** 3 * (q ** 2 + q + 1), q ** 3 * (q ** 4 + q ** 3 + 2 * q ** 2 + q + 1)],
    [0, 0, 0, q ** 6, q ** 6 * (q ** 3 + q ** 2 + q + 1)],
    [0, 0, 0, 0, q ** 10],
]
T5_INVERSE = [
    [1, _r(-1, q), _r(1, q ** 2), _r(-1, q ** 3), _r(1, q ** 4)],
    [0, _r(1, q), _r(-(q + 1), q ** 3), _r(q ** 2 + q + 1, q ** 5), _r(-(q ** 3 + q ** 2 + q + 1), q ** 7)],
    [0, 0, _r(1, q ** 3), _r(-(q ** 2 + q + 1), q ** 6), _r(q ** 4 + q ** 3 + 2 * q ** 2 + q + 1, q ** 9)],
    [0, 0, 0, _r(1, q ** 6), _r(-(q ** 3 + q ** 2 + q + 1), q ** 10)],
    [0, 0, 0, 0, _r(1, q ** 10)],
]


@contextmanager
def criterion(number: int, title: str, limit: float, capsys=None):
    """Time the body; print one line; fail on a false result or a slow run."""
    state = {"ok": False, "note": ""}
    start = time.perf_counter()
    try:
        yield state
    finally:
        elapsed = time.perf_counter() - start
        ok = state["ok"] and elapsed < limit
        note = state["note"] or ("" if elapsed < limit else f"over {limit:g}s limit")
        line = f"[{'PASS' if ok else 'FAIL'}] criterion {number:>2}: {title} ({elapsed:.2f}s){' - ' + note if note else ''}"
        if capsys is not None:
            with capsys.disabled():
                print("\n" + line)
        else:
            print(line)
    assert state["ok"], state["note"] or title
    assert elapsed < limit, f"criterion {number} took {elapsed:.1f}s (limit {limit}s)"


def _matrix_equals(m, display) -> bool:
    return all(m[i + 1, j + 1] == as_qrational(display[i][j]) for i in range(5) for j in range(5))


def test_criterion_01_t_matrix_n5(capsys):
    with criterion(1, "T(5) equals the worked matrix", 1, capsys) as c:
        c["ok"] = _matrix_equals(t_matrix(5), T5)


def test_criterion_02_inverse_and_identity(capsys):
    with criterion(2, "T^-1(5) equals the worked inverse; T T^-1 = I for n <= 12", 10, capsys) as c:
        ok = _matrix_equals(t_inverse(5), T5_INVERSE)
        for n in range(1, 13):
            ok = ok and (t_matrix(n) @ t_inverse(n)).is_identity()
        c["ok"] = ok


def test_criterion_03_cauchy_q_binomial(capsys):
    with criterion(3, "Cauchy q-binomial product = alternating sum, k <= 20", 1, capsys) as c:
        c["ok"] = all(cauchy_qbinom_rhs(k) == z_pochhammer(k) for k in range(21))


def test_criterion_04_newton_roundtrip(capsys):
    with criterion(4, "sum_k (z;q)_k E_{n,k}/(q;q)_k = e_n[X(1-z)/(1-q)], n <= 8", 60, capsys) as c:
        c["ok"] = all(reconstruct_en(enk_via_newton(n)) == en_one_minus_z_over_one_minus_q(n)
                      for n in range(1, 9))


def test_criterion_05_hook_schur_expansion(capsys):
    with criterion(5, "s_hook[X/(1-q)] = sum_r T_{k+1,r} E_{n,r}/(q;q)_r, n <= 8", 60, capsys) as c:
        c["ok"] = all(hook_schur_expansion_check(n) for n in range(1, 9))


def test_criterion_06_powersum_as_stated(capsys):
    with criterion(6, "(-1)^n p_n = sum_r (1-q^n)/(1-q^r) E_{n,r}, n <= 8", 60, capsys) as c:
        failing = []
        for n in range(1, 9):
            pn, rhs = powersum_sides(n)
            if rhs != (-1) ** n * pn:
                failing.append(n)
        c["ok"] = not failing
        if failing:
            c["note"] = (f"fails for n in {failing}; the right side equals (-1)^(n-1) p_n "
                         f"(at n = 1 it is E_{{1,1}} = p_1)")


def test_criterion_07_three_routes(capsys):
    with criterion(7, "Hall-Littlewood = Newton = Schur routes for E_{n,k}, n <= 7", 300, capsys) as c:
        ok = True
        for n in range(1, 8):
            newton, via_schur = enk_via_newton(n), enk_via_schur(n)
            ok = ok and newton.same_as(via_schur)
            ok = ok and all(enk_via_hall_littlewood(n, k) == newton[k] for k in range(1, n + 1))
        c["ok"] = ok


def test_criterion_08_theorem(capsys):
    with criterion(8, "T_{k,r} = K~_{(n-k+1,1^(k-1)),mu'}(q) for mu in Par(n,r), n <= 7", 300, capsys) as c:
        ok = True
        for n in range(1, 8):
            ok = ok and not main_theorem_mismatches(n)
            # independence of mu: every mu in Par(n,r) gives the same polynomial
            for r in range(1, n + 1):
                for k in range(1, r + 1):
                    lam = Partition.hook(n - k + 1, k)
                    values = {kostka_cocharge(lam, mu.conjugate()) for mu in par_with_max(n, r)}
                    ok = ok and len(values) == 1
        c["ok"] = ok


def test_criterion_09_hook_kostka(capsys):
    with criterion(9, "hook Kostka closed form = cocharge enumeration, n <= 8", 300, capsys) as c:
        ok = True
        for n in range(1, 9):
            for mu in partitions_of(n):
                for k in range(n):
                    ok = ok and kostka_hook(n, k, len(mu)) == kostka_cocharge(Partition.hook(n - k, k + 1), mu)
        c["ok"] = ok


def test_criterion_10_hall_littlewood_properties(capsys):
    with criterion(10, "H~_mu properties (1)-(3) and H~_mu(X;q,0)[1-z] = (z;q)_mu1, n <= 7", 300, capsys) as c:
        ok = True
        for n in range(1, 8):
            for mu in partitions_of(n):
                ok = ok and validate_hl_axioms(mu).ok
                try:
                    ok = ok and hl_at_one_minus_z(mu) == z_pochhammer(mu[0])
                except ArithmeticError:
                    ok = False
        c["ok"] = ok


def test_criterion_11_schur_at_one_minus_z(capsys):
    with criterion(11, "s_mu[1-z] = (-z)^k (1-z) on hooks, 0 otherwise, n <= 8", 30, capsys) as c:
        ok = True
        alphabet = FiniteAlphabet.one_minus_z()
        for n in range(1, 9):
            for mu in partitions_of(n):
                value = pleth_finite(schur(mu), alphabet)
                if mu.is_hook():
                    k = len(mu) - 1
                    expected = z_pochhammer(1) * ((-1) ** k)
                    expected = type(expected)([QRational(0)] * k + list(expected.coeffs))
                    ok = ok and value == expected
                else:
                    ok = ok and not value
        c["ok"] = ok


def test_criterion_12_schur_in_hall_littlewood_basis(capsys):
    with criterion(12, "s_lam[X/(1-q)] Hall-Littlewood expansion, lam |- n <= 6", 300, capsys) as c:
        c["ok"] = all(schur_hall_expansion_check(lam) for n in range(1, 7) for lam in partitions_of(n))


def test_criterion_13_uncorrected_forms_fail(capsys):
    with criterion(13, "uncorrected inverse entry and recursion fail on n = 5; corrected forms pass", 5, capsys) as c:
        display_inverse = [[as_qrational(x) for x in row] for row in T5_INVERSE]
        display_t = [[QPolynomial.constant(x) if isinstance(x, int) else x for x in row] for row in T5]
        cells = [(i, j) for j in range(1, 6) for i in range(1, j + 1)]
        uncorrected_inverse_ok = all(uncorrected_inverse_entry(i, j) == display_inverse[i - 1][j - 1]
                                     for i, j in cells)
        corrected_inverse_ok = all(t_inverse_entry(i, j) == display_inverse[i - 1][j - 1] for i, j in cells)
        rec_cells = [(i, j) for j in range(2, 6) for i in range(2, j + 1)]
        uncorrected_rec_ok = all(uncorrected_recursion_rhs(i, j) == display_t[i - 1][j - 1] for i, j in rec_cells)
        corrected_rec_ok = all(corrected_recursion_rhs(i, j) == display_t[i - 1][j - 1] for i, j in rec_cells)
        c["ok"] = (not uncorrected_inverse_ok and corrected_inverse_ok
                   and not uncorrected_rec_ok and corrected_rec_ok)
        first = next((i, j) for i, j in cells if uncorrected_inverse_entry(i, j) != display_inverse[i - 1][j - 1])
        c["note"] = f"uncorrected inverse first differs at {first}" if c["ok"] else ""


if __name__ == "__main__":
    import sys

    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn(None)
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
