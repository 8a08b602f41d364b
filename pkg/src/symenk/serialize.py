"""JSON encodings and plain/LaTeX rendering for polynomials, matrices and
symmetric functions."""

from __future__ import annotations

from fractions import Fraction

from .algebra import QPolynomial, QRational, ZPoly
from .partitions import Partition
from .symfun import SymFunc

# -- JSON -------------------------------------------------------------------------


def poly_to_json(p: QPolynomial, var: str = "q") -> dict:
    return {"var": var,
            "terms": [[e, [str(c.numerator), str(c.denominator)]] for e, c in sorted(p.terms.items())]}


def poly_from_json(obj: dict) -> QPolynomial:
    return QPolynomial({int(e): Fraction(int(n), int(d)) for e, (n, d) in obj["terms"]})


def qrational_to_json(r) -> dict:
    r = r if isinstance(r, QRational) else QRational(r)
    return {"num": poly_to_json(r.num), "den": poly_to_json(r.den)}


def qrational_from_json(obj: dict) -> QRational:
    return QRational(poly_from_json(obj["num"]), poly_from_json(obj["den"]))


def zpoly_to_json(z: ZPoly) -> dict:
    return {"var": "z", "coeffs": [qrational_to_json(c if c else QRational(0)) for c in z.coeffs]}


def zpoly_from_json(obj: dict) -> ZPoly:
    return ZPoly([qrational_from_json(c) for c in obj["coeffs"]])


def ring_to_json(x) -> dict:
    if isinstance(x, ZPoly):
        return zpoly_to_json(x)
    if isinstance(x, QPolynomial):
        return poly_to_json(x)
    return qrational_to_json(x)


def ring_from_json(obj: dict):
    if "num" in obj:
        return qrational_from_json(obj)
    if obj.get("var") == "z":
        return zpoly_from_json(obj)
    return poly_from_json(obj)


def symfunc_to_json(f: SymFunc, basis: str = "schur") -> dict:
    coeffs = f.coefficients(basis)
    return {"degree": f.degree, "basis": basis,
            "coeffs": [[str(lam), ring_to_json(c)] for lam, c in sorted(coeffs.items(), reverse=True)]}


def symfunc_from_json(obj: dict) -> SymFunc:
    coeffs = {Partition.parse(k): ring_from_json(v) for k, v in obj["coeffs"]}
    return SymFunc.from_basis(int(obj["degree"]), obj["basis"], coeffs)


def matrix_to_json(m) -> dict:
    return {"n": m.n,
            "entries": [[i, j, qrational_to_json(v)] for (i, j), v in sorted(m.entries.items())]}


def matrix_from_json(obj: dict):
    from .enk import TransitionMatrix

    return TransitionMatrix(int(obj["n"]), {(int(i), int(j)): qrational_from_json(v)
                                            for i, j, v in obj["entries"]})


# -- LaTeX --------------------------------------------------------------------------
# Layout follows the usual computer-algebra export: braces around powers
# ({q}^{3}), "2\," before a monomial, \left( \right) around factored sums and
# {\frac {num}{den}} for quotients.


def _latex_monomial(e: int) -> str:
    return "q" if e == 1 else f"{{q}}^{{{e}}}"


def _latex_rational(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return f"\\frac {{{c.numerator}}}{{{c.denominator}}}"


def _latex_poly_desc(p: QPolynomial) -> str:
    """Descending layout, e.g. ``{q}^{4}+{q}^{3}+2\\,{q}^{2}+q+1``."""
    out = ""
    for e, c in sorted(p.terms.items(), reverse=True):
        a = abs(c)
        if e == 0:
            body = _latex_rational(a)
        else:
            body = _latex_monomial(e) if a == 1 else f"{_latex_rational(a)}\\,{_latex_monomial(e)}"
        if out:
            out += ("-" if c < 0 else "+") + body
        else:
            out = ("-" if c < 0 else "") + body
    return out or "0"


def _latex_factored(p: QPolynomial) -> str:
    """Pull out the lowest power of q when the rest is a proper sum.

    ``q`` trails the bracket, higher powers lead it:
    ``\\left( q+1 \\right) q`` and ``{q}^{3} \\left( {q}^{2}+q+1 \\right)``.
    """
    if not p:
        return "0"
    v = p.valuation
    if len(p.terms) == 1 or v <= 0:
        return _latex_poly_desc(p)
    inner = f"\\left( {_latex_poly_desc(p.shift(-v))} \\right)"
    return f"{inner} q" if v == 1 else f"{_latex_monomial(v)} {inner}"


def latex_qrational(r: QRational) -> str:
    if r.den.is_constant():
        return _latex_factored(QPolynomial({e: c / r.den.coefficient(0) for e, c in r.num.terms.items()}))
    laurent = r.as_laurent()
    if laurent is not None and len(laurent.terms) == 1:
        return _latex_poly_desc(laurent)
    num = r.num
    sign = ""
    if all(c < 0 for c in num.coeffs if c):
        sign, num = "-", -num
    return f"{sign}{{\\frac {{{_latex_factored(num)}}}{{{_latex_factored(r.den)}}}}}"


def latex_matrix(m) -> str:
    rows = [" & ".join(latex_qrational(x) for x in row) for row in m.rows()]
    cols = "c" * m.n
    return (f"\\left( \\begin {{array}}{{{cols}}} "
            + "\\\\\\noalign{\\medskip}\n".join(rows)
            + "\\end {array} \\right)")


def latex_symfunc(f: SymFunc, basis: str = "schur") -> str:
    letter = {"schur": "s", "powersum": "p", "elementary": "e",
              "homogeneous": "h", "monomial": "m"}[basis]
    parts = []
    for lam, c in sorted(f.coefficients(basis).items(), reverse=True):
        coeff = latex_qrational(c if isinstance(c, QRational) else QRational(c))
        parts.append(f"\\left( {coeff} \\right) {letter}_{{{lam}}}")
    return " + ".join(parts) if parts else "0"
