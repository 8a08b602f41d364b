"""``symenk`` command line: matrices, E_{n,k} expansions, Kostka polynomials and
the verification sweeps.

Exit codes: 0 success, 1 identity violation, 2 usage or bounds error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .algebra import QRational
from .enk import MATRIX_CAP, NEWTON_CAP, SCHUR_CAP, enk_family, t_inverse, t_matrix
from .hall_littlewood import HL_BOUND, kostka_cocharge, kostka_hook
from .partitions import Partition
from .serialize import (latex_matrix, latex_qrational, latex_symfunc, matrix_to_json,
                        poly_to_json, symfunc_to_json)
from .verify import SUITE_CAPS, SUITES, run_suite

METHOD_CAPS = {"newton": NEWTON_CAP, "schur": SCHUR_CAP, "hall": HL_BOUND}
BASIS_LETTER = {"schur": "s", "powersum": "p"}


class UsageError(Exception):
    """Bad arguments or an out-of-range size; maps to exit code 2."""


def _plain_symfunc(f, basis: str) -> str:
    letter = BASIS_LETTER[basis]
    parts = [f"({c})*{letter}[{lam}]" for lam, c in sorted(f.coefficients(basis).items(), reverse=True)]
    return " + ".join(parts) if parts else "0"


def _plain_matrix(m) -> str:
    cells = [[str(x) for x in row] for row in m.rows()]
    width = max(len(c) for row in cells for c in row)
    return "\n".join("  ".join(c.rjust(width) for c in row) for row in cells)


def cmd_tmatrix(args) -> str:
    if not 1 <= args.n <= args.max_n:
        raise UsageError(f"tmatrix needs 1 <= n <= {args.max_n}, got {args.n}")
    m = t_inverse(args.n, cap=args.max_n) if args.inverse else t_matrix(args.n, cap=args.max_n)
    if args.format == "json":
        return json.dumps(matrix_to_json(m))
    if args.format == "latex":
        return latex_matrix(m)
    return _plain_matrix(m)


def cmd_enk(args) -> str:
    cap = METHOD_CAPS[args.method]
    if not 1 <= args.n <= cap:
        raise UsageError(f"enk --method {args.method} needs 1 <= n <= {cap}, got {args.n}")
    fam = enk_family(args.n, args.method)
    if args.format == "json":
        return json.dumps({"n": args.n, "method": args.method,
                           "members": [symfunc_to_json(fam[k], args.basis) for k in range(1, args.n + 1)]})
    lines = []
    for k in range(1, args.n + 1):
        if args.format == "latex":
            lines.append(f"E_{{{args.n},{k}}} = {latex_symfunc(fam[k], args.basis)}")
        else:
            lines.append(f"E_{{{args.n},{k}}} = {_plain_symfunc(fam[k], args.basis)}")
    return "\n".join(lines)


def _partition(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except ValueError as exc:
        raise UsageError(f"bad partition {text!r}: {exc}") from None


def cmd_kostka(args) -> str:
    lam, mu = _partition(args.lam), _partition(args.mu)
    if lam.size != mu.size:
        raise UsageError(f"|{lam}| != |{mu}|")
    if not lam:
        raise UsageError("partitions must be nonempty")
    if args.method == "hook":
        if not lam.is_hook():
            raise UsageError(f"{lam} is not a hook; use --method cocharge")
        value = kostka_hook(lam.size, len(lam) - 1, len(mu))
    else:
        value = kostka_cocharge(lam, mu)
    if args.format == "json":
        return json.dumps(poly_to_json(value))
    if args.format == "latex":
        return latex_qrational(QRational(value))
    return str(value)


def cmd_verify(args) -> tuple[str, int]:
    n_max = args.n if args.n is not None else args.max_n
    if n_max is None:
        raise UsageError("verify needs N (positional or --max-n)")
    if args.suite != "all" and not 1 <= n_max <= SUITE_CAPS[args.suite]:
        raise UsageError(f"verify {args.suite} needs 1 <= n <= {SUITE_CAPS[args.suite]}, got {n_max}")
    if n_max < 1:
        raise UsageError("n must be positive")
    lines = []
    first_failure = None
    for res in run_suite(args.suite, n_max):
        lines.append(f"{'PASS' if res.ok else 'FAIL'}  {res.suite:<9} n={res.n:<3} {res.name}")
        if not res.ok and first_failure is None:
            first_failure = res
    if first_failure is not None:
        lines.append(f"first counterexample: suite={first_failure.suite} n={first_failure.n} "
                     f"{first_failure.name} {first_failure.detail}".rstrip())
        return "\n".join(lines), 1
    lines.append(f"all {len(lines)} checks passed")
    return "\n".join(lines), 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="symenk", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("plain", "json", "latex"), default="plain")

    p = sub.add_parser("tmatrix", help="hook-Schur transition matrix T or its inverse")
    p.add_argument("n", type=int)
    p.add_argument("--inverse", action="store_true")
    p.add_argument("--max-n", type=int, default=MATRIX_CAP)
    add_format(p)
    p.set_defaults(func=cmd_tmatrix)

    p = sub.add_parser("enk", help="E_{n,1}, ..., E_{n,n}")
    p.add_argument("n", type=int)
    p.add_argument("--method", choices=tuple(METHOD_CAPS), default="newton")
    p.add_argument("--basis", choices=tuple(BASIS_LETTER), default="schur")
    add_format(p)
    p.set_defaults(func=cmd_enk)

    p = sub.add_parser("kostka", help="cocharge Kostka-Foulkes polynomial")
    p.add_argument("lam")
    p.add_argument("mu")
    p.add_argument("--method", choices=("cocharge", "hook"), default="cocharge")
    add_format(p)
    p.set_defaults(func=cmd_kostka)

    p = sub.add_parser("verify", help="run an invariant sweep")
    p.add_argument("suite", choices=SUITES)
    p.add_argument("n", type=int, nargs="?")
    p.add_argument("--max-n", type=int)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        out = args.func(args)
    except (UsageError, ValueError) as exc:
        print(f"symenk: {exc}", file=sys.stderr)
        return 2
    except ArithmeticError as exc:
        print(f"symenk: identity violated: {exc}", file=sys.stderr)
        return 1
    code = 0
    if isinstance(out, tuple):
        out, code = out
    print(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
