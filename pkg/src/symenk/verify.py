"""Invariant sweeps driven by ``symenk verify``."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator

from .algebra import ZERO, QRational, ZPoly, cauchy_qbinom_rhs, z_pochhammer
from .enk import (MATRIX_CAP, NEWTON_CAP, en_one_minus_z_over_one_minus_q,
                  enk_family_via_hall_littlewood, enk_via_newton, enk_via_schur,
                  hook_powersum_bridge, hook_schur_expansion_check,
                  main_theorem_mismatches, powersum_identity, reconstruct_en,
                  schur_hall_expansion_check, span_rank_check, t_entry, t_inverse)
from .hall_littlewood import (HL_BOUND, hl_at_one_minus_z, kostka_cocharge,
                              kostka_hook, validate_hl_axioms)
from .partitions import Partition, partitions_of
from .plethysm import FiniteAlphabet, pleth_finite
from .symfun import schur

SUITE_CAPS = {
    "tmatrix": MATRIX_CAP,
    "enk": NEWTON_CAP,
    "hall": HL_BOUND + 1,  # hook-formula sweep reaches n = 8
    "theorem": HL_BOUND,
    "powersum": NEWTON_CAP,
}
SUITES = ("all",) + tuple(SUITE_CAPS)


@dataclass
class CheckResult:
    suite: str
    name: str
    n: int
    ok: bool
    detail: str = ""


def _tmatrix(n_max: int) -> Iterator[CheckResult]:
    for k in range(0, 21):
        yield CheckResult("tmatrix", "cauchy q-binomial", k, cauchy_qbinom_rhs(k) == z_pochhammer(k))
    for n in range(1, n_max + 1):
        ok = True
        detail = ""
        try:
            t_inverse(n)
        except ArithmeticError as exc:
            ok, detail = False, str(exc)
        yield CheckResult("tmatrix", "T * T^-1 = I", n, ok, detail)
        bad = [(k, r) for r in range(2, n + 1) for k in range(1, r)
               if t_entry(k + 1, r) != t_entry(k + 1, r - 1) + t_entry(k, r - 1).shift(r - 1)]
        detail = "" if not bad else f"first failure at (k+1, r) = ({bad[0][0] + 1}, {bad[0][1]})"
        yield CheckResult("tmatrix", "T recursion (q^(r-1) multiplier)", n, not bad, detail)


def _enk(n_max: int) -> Iterator[CheckResult]:
    for n in range(1, n_max + 1):
        fam = enk_via_newton(n)
        yield CheckResult("enk", "e_n[X(1-z)/(1-q)] roundtrip", n,
                          reconstruct_en(fam) == en_one_minus_z_over_one_minus_q(n))
        yield CheckResult("enk", "newton = schur route", n, fam.same_as(enk_via_schur(n)))
        yield CheckResult("enk", "hook Schur = T E", n, hook_schur_expansion_check(n))
        yield CheckResult("enk", "span/rank", n, span_rank_check(n))


def _hall(n_max: int) -> Iterator[CheckResult]:
    one_minus_z = FiniteAlphabet.one_minus_z()
    for n in range(1, n_max + 1):
        bad = []
        for mu in partitions_of(n):
            value = pleth_finite(schur(mu), one_minus_z)
            # hooks (n-k, 1^k) give (-z)^k (1-z); every other shape vanishes
            expected = _hook_value(len(mu) - 1) if mu.is_hook() else ZERO
            if value != expected:
                bad.append(mu)
        yield CheckResult("hall", "s_mu[1-z] hook formula", n, not bad, f"mu={bad[0]}" if bad else "")
        bad = []
        for mu in partitions_of(n):
            for k in range(n):
                lam = Partition.hook(n - k, k + 1)
                a, b = kostka_hook(n, k, len(mu)), kostka_cocharge(lam, mu)
                if a != b:
                    bad.append(f"lam={lam} mu={mu}: hook={a} cocharge={b}")
        yield CheckResult("hall", "hook Kostka formula", n, not bad, bad[0] if bad else "")
        if n > HL_BOUND:
            continue
        bad = [str(mu) for mu in partitions_of(n) if not validate_hl_axioms(mu).ok]
        yield CheckResult("hall", "H~ characterising properties", n, not bad, f"mu={bad[0]}" if bad else "")
        bad = []
        for mu in partitions_of(n):
            try:
                hl_at_one_minus_z(mu)
            except ArithmeticError:
                bad.append(str(mu))
        yield CheckResult("hall", "H~_mu'[1-z] = (z;q)_mu1", n, not bad, f"mu={bad[0]}" if bad else "")
        if n <= 6:
            bad = [str(lam) for lam in partitions_of(n) if not schur_hall_expansion_check(lam)]
            yield CheckResult("hall", "s_lam[X/(1-q)] Hall-Littlewood expansion", n, not bad,
                              f"lam={bad[0]}" if bad else "")


def _hook_value(k: int) -> ZPoly:
    sign = QRational((-1) ** k)
    return ZPoly([ZERO] * k + [sign, -sign])


def _theorem(n_max: int) -> Iterator[CheckResult]:
    for n in range(1, n_max + 1):
        bad = main_theorem_mismatches(n)
        detail = ""
        if bad:
            m = bad[0]
            detail = f"n={m.n} k={m.k} r={m.r} mu={m.mu}: T={m.t_value} K={m.kostka_value}"
        yield CheckResult("theorem", "T_{k,r} = K~_{hook, mu'}", n, not bad, detail)
        newton = enk_via_newton(n)
        hall = enk_family_via_hall_littlewood(n)
        bad_k = [k for k in range(1, n + 1) if newton[k] != hall[k]]
        yield CheckResult("theorem", "Hall-Littlewood route = newton route", n, not bad_k,
                          f"k={bad_k[0]}" if bad_k else "")


def _powersum(n_max: int) -> Iterator[CheckResult]:
    for n in range(1, n_max + 1):
        yield CheckResult("powersum", "(-1)^(n-1) p_n = sum (1-q^n)/(1-q^r) E_{n,r}", n, powersum_identity(n))
        pn, rhs = hook_powersum_bridge(n)
        yield CheckResult("powersum", "(-1)^(n-1) p_n = sum (-1)^k s_hook", n,
                          rhs == (pn if n % 2 else -pn))
        pn, rhs = hook_powersum_bridge(n, plethystic=True)
        yield CheckResult("powersum", "(-1)^(n-1) p_n = (1-q^n) sum (-1)^k s_hook[X/(1-q)]", n,
                          rhs == (pn if n % 2 else -pn))


_RUNNERS: dict[str, Callable[[int], Iterator[CheckResult]]] = {
    "tmatrix": _tmatrix,
    "enk": _enk,
    "hall": _hall,
    "theorem": _theorem,
    "powersum": _powersum,
}


def run_suite(suite: str, n_max: int) -> Iterator[CheckResult]:
    """Yield results for ``suite``; ``all`` clamps ``n_max`` to each suite's cap."""
    if suite == "all":
        for name, runner in _RUNNERS.items():
            yield from runner(min(n_max, SUITE_CAPS[name]))
        return
    if suite not in _RUNNERS:
        raise ValueError(f"unknown suite {suite!r}")
    if not 1 <= n_max <= SUITE_CAPS[suite]:
        raise ValueError(f"suite {suite!r} needs 1 <= n <= {SUITE_CAPS[suite]}")
    yield from _RUNNERS[suite](n_max)
