"""Named classes understood by the command line."""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Tuple

from . import riemann_roch as rr
from .clifford import B0Char, b_char, psi_rho_image, twist
from .ring import rat


class UnknownClass(ValueError):
    pass


_TERM = re.compile(r"([+-]?)(\d+(?:/\d+)?)?\*?(?:l|lambda)([12])")
_LINE_BUNDLE = re.compile(r"O(?:\(([+-]?\d+(?:/\d+)?)(?:H)?\))?")
_B = re.compile(r"B([+-]?\d+)")


def parse_lambda_expr(expr: str) -> Tuple[Fraction, Fraction]:
    """Parse ``2l1+2l2``, ``lambda1``, ``-l2``, ``1/2*l1`` into coefficients."""
    s = expr.replace(" ", "")
    if not s:
        raise UnknownClass("empty lambda expression")
    coeffs = [Fraction(0), Fraction(0)]
    pos = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or (pos > 0 and not m.group(1)):
            raise UnknownClass(f"cannot parse lambda expression {expr!r}")
        k = rat(m.group(2)) if m.group(2) else Fraction(1)
        if m.group(1) == "-":
            k = -k
        coeffs[int(m.group(3)) - 1] += k
        pos = m.end()
    return coeffs[0], coeffs[1]


def y_class(name: str) -> rr.KClass:
    """Resolve a class on the cubic fourfold by name."""
    fixed = {
        "p_ell": rr.p_ell_class,
        "e_gamma": rr.e_gamma_class,
        "e_c": rr.e_c_class,
        "i_gamma": rr.ideal_elliptic_quintic_twist,
    }
    if name in fixed:
        return fixed[name]()
    m = _LINE_BUNDLE.fullmatch(name)
    if m:
        return rr.line_bundle(m.group(1) or 0)
    try:
        a, b = parse_lambda_expr(name)
    except UnknownClass:
        raise UnknownClass(f"unknown class {name!r}") from None
    return rr.lambda_combination(a, b)


def b0_class(name: str, beta=-1) -> B0Char:
    """Resolve ``B<j>`` or ``psi:<lambda expr>`` to a character at twist ``beta``."""
    m = _B.fullmatch(name)
    if m:
        return b_char(int(m.group(1)), beta)
    if name.startswith("psi:"):
        a, b = parse_lambda_expr(name[4:])
        return twist(psi_rho_image(a, b), beta)
    raise UnknownClass(f"unknown class {name!r}")


def is_b0_name(name: str) -> bool:
    return bool(_B.fullmatch(name)) or name.startswith("psi:")
