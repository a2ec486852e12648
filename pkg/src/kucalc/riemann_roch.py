"""Numerical K-theory of the cubic fourfold Y.

Classes are represented by their Chern characters. Euler pairings come from
Hirzebruch-Riemann-Roch with ``int H^4 = 3`` and the Todd class of Y derived
from ``c(T_Y) = (1+H)^6 / (1+3H)``; neither input is tabulated by hand.
Mutations act on classes by subtracting Euler-pairing multiples of the
mutating exceptional class.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from .ring import (
    GradedClass,
    RatLike,
    VarietyId,
    dual_ch,
    exp_class,
    format_rat,
    graded,
    integrate,
    rat,
    todd,
)

CUBIC = VarietyId.CubicFourfold


@dataclass(frozen=True)
class KClass:
    """Chern character of a class in the numerical K-group of Y."""

    ch: GradedClass

    def __post_init__(self):
        if self.ch.variety is not CUBIC:
            raise ValueError("KClass must live on the cubic fourfold")

    @classmethod
    def of(cls, *coeffs: RatLike) -> "KClass":
        return cls(graded(CUBIC, coeffs))

    @classmethod
    def zero(cls) -> "KClass":
        return cls(GradedClass.zero(CUBIC))

    @classmethod
    def from_display(cls, *vector: RatLike) -> "KClass":
        """Inverse of :meth:`display`: last entry is the degree of ``ch_4``."""
        *head, top = (rat(v) for v in vector)
        return cls(graded(CUBIC, (*head, top / CUBIC.h_top)))

    @property
    def coeffs(self) -> tuple:
        return self.ch.coeffs

    def display(self) -> tuple:
        """``(rk, ch_1, ch_2, ch_3)`` as multiples of ``H^k``, then ``int ch_4``.

        This is the customary way of writing characters on Y: the top-degree
        part is a number of points rather than a multiple of ``H^4``.
        """
        c = self.ch.coeffs
        return c[:4] + (integrate(self.ch.degree_part(4)),)

    @property
    def rank(self) -> Fraction:
        return self.ch.coeffs[0]

    def __add__(self, other):
        if not isinstance(other, KClass):
            return NotImplemented
        return KClass(self.ch + other.ch)

    def __sub__(self, other):
        if not isinstance(other, KClass):
            return NotImplemented
        return KClass(self.ch - other.ch)

    def __neg__(self):
        return KClass(-self.ch)

    def __mul__(self, k):
        if isinstance(k, (int, Fraction)) and not isinstance(k, bool):
            return KClass(self.ch * k)
        return NotImplemented

    __rmul__ = __mul__

    def __str__(self) -> str:
        return "(" + ", ".join(format_rat(c) for c in self.display()) + ")"


@dataclass(frozen=True)
class CurveData:
    """A sheaf on a curve in Y, known only through ``H.C`` and its Euler characteristic."""

    degree: int
    euler_char: int

    def __post_init__(self):
        if self.degree < 1:
            raise ValueError("curve degree must be positive")


def line_bundle(k: RatLike) -> KClass:
    """``[O_Y(kH)]``."""
    return KClass(exp_class(CUBIC, k))


O_Y = line_bundle(0)


def euler_pairing(e: KClass, f: KClass) -> Fraction:
    """``chi(E, F) = int ch(E)^v ch(F) td(Y)``."""
    return integrate(dual_ch(e.ch) * f.ch * todd(CUBIC))


def chi(f: KClass) -> Fraction:
    return euler_pairing(O_Y, f)


def mukai_pairing(e: KClass, f: KClass) -> Fraction:
    return -euler_pairing(e, f)


# line class H^3/3 and point class H^4/3, so that int H.line = int point = 1
LINE = graded(CUBIC, (0, 0, 0, Fraction(1, 3)))
POINT = graded(CUBIC, (0, 0, 0, 0, Fraction(1, 3)))


def curve_class(c: CurveData) -> KClass:
    # chi = (3/2) d + x from the degree-1 Todd term paired with d*line
    x = Fraction(c.euler_char) - Fraction(3, 2) * c.degree
    return KClass(LINE * c.degree + POINT * x)


def left_mutation(e: KClass, f: KClass) -> KClass:
    """Class of ``L_E(F)``: ``[F] - chi(E, F) [E]``. ``e`` must be exceptional."""
    return f - e * euler_pairing(e, f)


def right_mutation(e: KClass, f: KClass) -> KClass:
    """Class of ``R_E(F)``: ``[F] - chi(F, E) [E]``. ``e`` must be exceptional."""
    return f - e * euler_pairing(f, e)


def ku_projection_left(f: KClass) -> KClass:
    """``L_O L_O(H) L_O(2H)``, the left adjoint projection onto Ku(Y)."""
    for k in (2, 1, 0):
        f = left_mutation(line_bundle(k), f)
    return f


def project_ku(f: KClass) -> KClass:
    """``pr = R_O(-H) R_O(-2H) L_O``; the innermost functor is applied first."""
    f = left_mutation(O_Y, f)
    f = right_mutation(line_bundle(-2), f)
    return right_mutation(line_bundle(-1), f)


def project_ku_alt(f: KClass) -> KClass:
    """The same projection written as ``L_O R_O(-H) R_O(-2H)``."""
    f = right_mutation(line_bundle(-2), f)
    f = right_mutation(line_bundle(-1), f)
    return left_mutation(O_Y, f)


def line_sheaf(i: int) -> KClass:
    """``[O_L(iH)]`` for a line L; ``chi(O_L(i)) = i + 1``."""
    return curve_class(CurveData(1, i + 1))


def lambda_classes() -> Tuple[KClass, KClass]:
    return tuple(ku_projection_left(line_sheaf(i)) for i in (1, 2))


def lambda_combination(a: RatLike, b: RatLike) -> KClass:
    l1, l2 = lambda_classes()
    return l1 * rat(a) + l2 * rat(b)


def ideal_elliptic_quintic_twist() -> KClass:
    """``[I_Gamma(H)] = [O_Y(H)] - [O_Gamma(H)]`` with ``chi(O_Gamma(H)) = 5``."""
    return line_bundle(1) - curve_class(CurveData(5, 5))


def e_gamma_class() -> KClass:
    return project_ku(ideal_elliptic_quintic_twist())


def p_ell_class() -> KClass:
    """``pr(O_l[-1])``; the shift flips the sign of ``[O_l]``."""
    return project_ku(-curve_class(CurveData(1, 1)))


def theta_conic_class() -> KClass:
    """``theta_C(H)``, a degree-1 line bundle on a conic, i.e. ``O_P1(1)``."""
    return curve_class(CurveData(2, 2))


def e_c_class() -> KClass:
    """``ch(E_C) = 2 ch(O_Y) - ch(theta_C(H)) - 2 ch(O_Y(-H))``."""
    return O_Y * 2 - theta_conic_class() - line_bundle(-1) * 2


def e_c_class_via_projection() -> KClass:
    """``[pr(theta_C(H))[-1]]``, the definition of E_C, as a cross-check."""
    return -project_ku(theta_conic_class())
