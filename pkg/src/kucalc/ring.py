"""Truncated graded rings generated by a single hyperplane class.

Every ambient variety handled here has Picard rank one, so a cohomology class
is just a polynomial in ``H`` truncated above the dimension. Coefficients are
:class:`fractions.Fraction`; nothing in this package ever touches a float.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterable, Sequence, Union

Rat = Fraction
RatLike = Union[int, Fraction, str]


def rat(x: RatLike) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction.

    Floats are refused so inexact values cannot leak in.
    """
    if isinstance(x, bool) or isinstance(x, float):
        raise TypeError(f"refusing inexact value {x!r}")
    return Fraction(x)


class VarietyMismatch(ValueError):
    """Raised when classes living on different varieties are combined."""


class VarietyId(enum.Enum):
    P3 = ("P3", 3, 1)
    P5 = ("P5", 5, 1)
    CubicFourfold = ("CubicFourfold", 4, 3)

    def __init__(self, label: str, dim: int, h_top: int):
        self.label = label
        self.dim = dim
        # degree of the top power of the hyperplane class
        self.h_top = h_top

    def __repr__(self) -> str:
        return f"VarietyId.{self.name}"


P3 = VarietyId.P3
P5 = VarietyId.P5
Y = VarietyId.CubicFourfold


@dataclass(frozen=True)
class GradedClass:
    """A class ``sum_k coeffs[k] * H^k`` on ``variety``, truncated at its dimension."""

    variety: VarietyId
    coeffs: tuple

    def __post_init__(self):
        coeffs = tuple(rat(c) for c in self.coeffs)
        n = self.variety.dim + 1
        if len(coeffs) > n:
            if any(coeffs[n:]):
                raise ValueError(
                    f"class has nonzero terms above degree {self.variety.dim}"
                )
            coeffs = coeffs[:n]
        coeffs = coeffs + (Fraction(0),) * (n - len(coeffs))
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def zero(cls, variety: VarietyId) -> "GradedClass":
        return cls(variety, ())

    @classmethod
    def one(cls, variety: VarietyId) -> "GradedClass":
        return cls(variety, (1,))

    @classmethod
    def monomial(cls, variety: VarietyId, k: int, coeff: RatLike = 1) -> "GradedClass":
        """``coeff * H^k``; zero if ``k`` exceeds the dimension."""
        if k < 0:
            raise ValueError("negative degree")
        if k > variety.dim:
            return cls.zero(variety)
        return cls(variety, (0,) * k + (coeff,))

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k]

    def __len__(self) -> int:
        return len(self.coeffs)

    def _check(self, other: "GradedClass") -> None:
        if not isinstance(other, GradedClass):
            raise TypeError(f"expected GradedClass, got {type(other).__name__}")
        if other.variety is not self.variety:
            raise VarietyMismatch(
                f"{self.variety.label} class combined with {other.variety.label} class"
            )

    def __add__(self, other):
        if not isinstance(other, GradedClass):
            return NotImplemented
        self._check(other)
        return GradedClass(
            self.variety, tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __sub__(self, other):
        if not isinstance(other, GradedClass):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return GradedClass(self.variety, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, GradedClass):
            return mul(self, other)
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return GradedClass(self.variety, tuple(other * a for a in self.coeffs))
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self * other
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not supported; use inverse()")
        out = GradedClass.one(self.variety)
        for _ in range(n):
            out = out * self
        return out

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def degree_part(self, k: int) -> "GradedClass":
        return GradedClass.monomial(self.variety, k, self.coeffs[k])

    def inverse(self) -> "GradedClass":
        """Multiplicative inverse of a class with nonzero constant term."""
        c0 = self.coeffs[0]
        if c0 == 0:
            raise ZeroDivisionError("class with zero constant term is not invertible")
        n = self.variety.dim
        out = [Fraction(0)] * (n + 1)
        out[0] = 1 / c0
        for k in range(1, n + 1):
            acc = sum(self.coeffs[i] * out[k - i] for i in range(1, k + 1))
            out[k] = -acc / c0
        return GradedClass(self.variety, out)

    def __str__(self) -> str:
        return "(" + ", ".join(format_rat(c) for c in self.coeffs) + ")"


def format_rat(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def graded(variety: VarietyId, coeffs: Iterable[RatLike]) -> GradedClass:
    return GradedClass(variety, tuple(coeffs))


def add(a: GradedClass, b: GradedClass) -> GradedClass:
    return a + b


def mul(a: GradedClass, b: GradedClass) -> GradedClass:
    """Truncated product of two classes on the same variety."""
    a._check(b)
    n = a.variety.dim
    out = [Fraction(0)] * (n + 1)
    for i, x in enumerate(a.coeffs):
        if not x:
            continue
        for j in range(n + 1 - i):
            out[i + j] += x * b.coeffs[j]
    return GradedClass(a.variety, out)


def integrate(a: GradedClass) -> Fraction:
    """Degree of the top-dimensional part."""
    return a.coeffs[a.variety.dim] * a.variety.h_top


def exp_class(v: VarietyId, k: RatLike) -> GradedClass:
    """``exp(k H)``, i.e. the Chern character of ``O(kH)``."""
    k = rat(k)
    return GradedClass(v, tuple(k**n / factorial(n) for n in range(v.dim + 1)))


def dual_ch(a: GradedClass) -> GradedClass:
    return GradedClass(
        a.variety, tuple(c if k % 2 == 0 else -c for k, c in enumerate(a.coeffs))
    )


def tangent_chern(v: VarietyId) -> GradedClass:
    """Total Chern class of the tangent bundle (Euler sequence, adjunction for Y)."""
    one_plus_h = graded(v, (1, 1))
    if v is VarietyId.CubicFourfold:
        return one_plus_h**6 * graded(v, (1, 3)).inverse()
    return one_plus_h ** (v.dim + 1)


def todd_from_chern(c: GradedClass) -> GradedClass:
    """Todd class from a total Chern class, through degree 4."""
    v = c.variety
    if c.coeffs[0] != 1:
        raise ValueError("total Chern class must have constant term 1")
    if v.dim > 4:
        raise ValueError(f"Todd polynomials are only implemented through degree 4, not on {v.label}")
    c1, c2, c3, c4 = (c.degree_part(k) if k <= v.dim else GradedClass.zero(v) for k in range(1, 5))
    return (
        GradedClass.one(v)
        + c1 * Fraction(1, 2)
        + (c1 * c1 + c2) * Fraction(1, 12)
        + (c1 * c2) * Fraction(1, 24)
        + (-(c1**4) + 4 * c1 * c1 * c2 + 3 * c2 * c2 + c1 * c3 - c4) * Fraction(1, 720)
    )


_TODD_CACHE: dict = {}


def todd(v: VarietyId) -> GradedClass:
    """Todd class of the tangent bundle, memoized per variety."""
    if v not in _TODD_CACHE:
        _TODD_CACHE[v] = todd_from_chern(tangent_chern(v))
    return _TODD_CACHE[v]


def hrr_chi(a: GradedClass) -> Fraction:
    """``chi`` of a sheaf with Chern character ``a`` by Hirzebruch-Riemann-Roch."""
    return integrate(a * todd(a.variety))


def as_coeffs(values: Sequence[RatLike]) -> tuple:
    return tuple(rat(v) for v in values)
