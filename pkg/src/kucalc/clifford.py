"""Twisted Chern characters of B0-modules on P^3.

A character is the truncation ``(rk, ch_1, ch_2)`` of the modified Chern
character ``ch(Forg F) (1 - 11/32 l)``, recorded together with the twist
``beta`` at which it is written. Everything downstream (walls, slopes, the
Kuznetsov lattice) happens at ``beta = -1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from math import gcd
from typing import Iterable, Optional, Sequence, Tuple

from .ring import RatLike, format_rat, rat

# correction term of the modified Chern character; taken as given
MODIFICATION = Fraction(11, 32)
WORKING_TWIST = Fraction(-1)
# Ku(P^3, B0) characters at beta = -1 lie on the line c2 = -7/32 rk
KU_C2_PER_RANK = Fraction(-7, 32)

# forgetful images of the even and odd Clifford parts, as sums of O(k)
B0_SUMMANDS = ((1, 0), (1, -1), (2, -2))
B1_SUMMANDS = ((2, 0), (1, -1), (1, -2))


class IntegralityError(ValueError):
    """A character is not an integral combination of the lattice basis."""

    def __init__(self, coords: Sequence[Fraction], message: str = ""):
        self.coords = tuple(coords)
        shown = ", ".join(format_rat(c) for c in self.coords)
        super().__init__(message or f"non-integral lattice coordinates ({shown})")


class NotInHeartError(ValueError):
    """Slope requested for a character with negative twisted ``ch_1``."""


@total_ordering
class _PositiveInfinity:
    """Slope of characters with vanishing twisted ``ch_1``."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        return False

    def __hash__(self):
        return hash("+inf")

    def __repr__(self):
        return "INFINITY"

    def __str__(self):
        return "+inf"


INFINITY = _PositiveInfinity()


@dataclass(frozen=True, eq=False)
class B0Char:
    """``ch^beta_{B0, <= 2}`` of a B0-module: ``(rk, c1, c2)`` at twist ``beta``.

    Equality and hashing compare the underlying character, so the same class
    written at two twists compares equal.
    """

    rk: Fraction
    c1: Fraction
    c2: Fraction
    beta: Fraction = WORKING_TWIST

    def __post_init__(self):
        for name in ("rk", "c1", "c2", "beta"):
            object.__setattr__(self, name, rat(getattr(self, name)))

    @classmethod
    def of(cls, rk: RatLike, c1: RatLike, c2: RatLike, beta: RatLike = WORKING_TWIST) -> "B0Char":
        return cls(rat(rk), rat(c1), rat(c2), rat(beta))

    @classmethod
    def zero(cls, beta: RatLike = WORKING_TWIST) -> "B0Char":
        return cls.of(0, 0, 0, beta)

    def twist(self, beta_new: RatLike) -> "B0Char":
        return twist(self, beta_new)

    def at_working_twist(self) -> "B0Char":
        return twist(self, WORKING_TWIST)

    def triple(self) -> Tuple[Fraction, Fraction, Fraction]:
        return (self.rk, self.c1, self.c2)

    def _key(self):
        return self.at_working_twist().triple()

    def __eq__(self, other):
        if not isinstance(other, B0Char):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __add__(self, other):
        if not isinstance(other, B0Char):
            return NotImplemented
        o = twist(other, self.beta)
        return B0Char(self.rk + o.rk, self.c1 + o.c1, self.c2 + o.c2, self.beta)

    def __neg__(self):
        """Character of the shift ``F[1]``."""
        return B0Char(-self.rk, -self.c1, -self.c2, self.beta)

    def __sub__(self, other):
        if not isinstance(other, B0Char):
            return NotImplemented
        return self + (-other)

    def __mul__(self, k):
        if isinstance(k, (int, Fraction)) and not isinstance(k, bool):
            return B0Char(k * self.rk, k * self.c1, k * self.c2, self.beta)
        return NotImplemented

    __rmul__ = __mul__

    def __str__(self) -> str:
        return "(" + ", ".join(format_rat(x) for x in self.triple()) + ")"

    def __repr__(self) -> str:
        return f"B0Char({self}, beta={format_rat(self.beta)})"

    def to_json(self) -> dict:
        """Serialize at the working twist, rationals as strings."""
        c = self.at_working_twist()
        return {
            "rk": format_rat(c.rk),
            "c1": format_rat(c.c1),
            "c2": format_rat(c.c2),
            "beta": format_rat(c.beta),
        }

    @classmethod
    def from_json(cls, d: dict) -> "B0Char":
        return cls.of(d["rk"], d["c1"], d["c2"], d.get("beta", WORKING_TWIST))


@dataclass(frozen=True)
class TiltParams:
    alpha_sq: Fraction
    beta: Fraction = WORKING_TWIST

    def __post_init__(self):
        object.__setattr__(self, "alpha_sq", rat(self.alpha_sq))
        object.__setattr__(self, "beta", rat(self.beta))
        if self.alpha_sq <= 0:
            raise ValueError("alpha^2 must be positive")


@dataclass(frozen=True)
class SlopePoly:
    """A tilt slope as a function of alpha^2: ``const + alpha_coeff * alpha^2``."""

    const: Fraction
    alpha_coeff: Fraction

    def __call__(self, alpha_sq: RatLike) -> Fraction:
        return self.const + self.alpha_coeff * rat(alpha_sq)

    def __str__(self) -> str:
        q = self.alpha_coeff
        if q == 0:
            return format_rat(self.const)
        mono = "alpha^2" if abs(q) == 1 else f"{format_rat(abs(q))}*alpha^2"
        if self.const == 0:
            return mono if q > 0 else f"-{mono}"
        return f"{format_rat(self.const)} {'+' if q > 0 else '-'} {mono}"


@dataclass(frozen=True)
class LatticeBasis:
    vectors: Tuple[B0Char, B0Char, B0Char]

    def __post_init__(self):
        vs = tuple(v.at_working_twist() for v in self.vectors)
        if len(vs) != 3:
            raise ValueError("a lattice basis needs exactly three characters")
        object.__setattr__(self, "vectors", vs)
        if _det3(self.matrix()) == 0:
            raise ValueError("lattice basis is degenerate")

    @classmethod
    def of(cls, *triples: Sequence[RatLike]) -> "LatticeBasis":
        return cls(tuple(B0Char.of(*t) for t in triples))

    def matrix(self):
        # columns are basis vectors
        return [[v.triple()[i] for v in self.vectors] for i in range(3)]

    def combine(self, coords: Iterable[RatLike]) -> B0Char:
        out = B0Char.zero()
        for k, v in zip(coords, self.vectors):
            out = out + v * rat(k)
        return out

    def steps(self) -> Tuple[Fraction, Fraction, Fraction]:
        """Generators of the rank, ``c1`` and ``c2`` value groups of the lattice."""
        return tuple(
            _rat_gcd([v.triple()[i] for v in self.vectors]) for i in range(3)
        )


def _rat_gcd(values: Iterable[Fraction]) -> Fraction:
    vals = [Fraction(v) for v in values if v != 0]
    if not vals:
        return Fraction(0)
    den = 1
    for v in vals:
        den = den * v.denominator // gcd(den, v.denominator)
    g = 0
    for v in vals:
        g = gcd(g, int(v * den))
    return Fraction(g, den)


def _det3(m) -> Fraction:
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )


def _solve3(m, rhs) -> Tuple[Fraction, Fraction, Fraction]:
    det = _det3(m)
    out = []
    for j in range(3):
        mj = [[rhs[i] if k == j else m[i][k] for k in range(3)] for i in range(3)]
        out.append(_det3(mj) / det)
    return tuple(out)


def char_from_bundle(summands: Iterable[Tuple[int, RatLike]]) -> B0Char:
    """Character at ``beta = 0`` of a B0-module whose underlying sheaf is a sum of ``O(k)``."""
    rk = c1 = ch2 = Fraction(0)
    for mult, k in summands:
        k = rat(k)
        rk += mult
        c1 += mult * k
        ch2 += mult * k * k / 2
    return B0Char(rk, c1, ch2 - MODIFICATION * rk, Fraction(0))


def twist(c: B0Char, beta_new: RatLike) -> B0Char:
    """Rewrite ``c`` at twist ``beta_new`` by multiplying with ``exp(-(beta_new - beta) h)``."""
    d = rat(beta_new) - c.beta
    if d == 0:
        return c
    return B0Char(
        c.rk,
        c.c1 - d * c.rk,
        c.c2 - d * c.c1 + d * d / 2 * c.rk,
        rat(beta_new),
    )


def b_char(j: int, beta: RatLike = WORKING_TWIST) -> B0Char:
    """Character of ``B_j`` (``B_{2q} = B0(q)``, ``B_{2q+1} = B1(q)``)."""
    q, r = divmod(j, 2)
    base = B1_SUMMANDS if r else B0_SUMMANDS
    return twist(char_from_bundle((m, k + q) for m, k in base), beta)


def discriminant(c: B0Char) -> Fraction:
    return c.c1 * c.c1 - 2 * c.rk * c.c2


def mu_slope(c: B0Char) -> Fraction:
    """Classical slope ``ch_1 / rk`` of the untwisted character."""
    c0 = twist(c, 0)
    if c0.rk == 0:
        raise ZeroDivisionError("slope of a rank-zero character")
    return c0.c1 / c0.rk


def slope_mu_poly(c: B0Char, beta: RatLike = WORKING_TWIST) -> SlopePoly:
    """``mu_{alpha,beta}`` as a linear function of alpha^2 (requires positive twisted c1)."""
    t = twist(c, beta)
    if t.c1 <= 0:
        raise NotInHeartError(
            f"twisted ch_1 = {format_rat(t.c1)} is not positive; pass the shifted character"
        )
    return SlopePoly(t.c2 / t.c1, -t.rk / (2 * t.c1))


def slope_mu(c: B0Char, p: TiltParams):
    """Tilt slope ``(ch_2 - alpha^2/2 rk) / ch_1``; ``INFINITY`` when ``ch_1 = 0``."""
    t = twist(c, p.beta)
    if t.c1 < 0:
        raise NotInHeartError(
            f"twisted ch_1 = {format_rat(t.c1)} < 0; pass the shifted character"
        )
    if t.c1 == 0:
        return INFINITY
    return (t.c2 - p.alpha_sq / 2 * t.rk) / t.c1


def central_charge(c: B0Char, p: TiltParams) -> Tuple[Fraction, Fraction]:
    """``Z_{alpha,beta} = i ch_1 + alpha^2/2 rk - ch_2`` as ``(Re, Im)``."""
    t = twist(c, p.beta)
    return (p.alpha_sq / 2 * t.rk - t.c2, t.c1)


def rotated_central_charge(c: B0Char, p: TiltParams) -> Tuple[Fraction, Fraction]:
    """``-i Z_{alpha,beta}`` as ``(Re, Im)``."""
    re, im = central_charge(c, p)
    return (im, -re)


def reduced_Z(c: B0Char) -> Tuple[Fraction, Fraction]:
    """Central charge ``ch^{-1}_1 - i rk`` on the Kuznetsov component."""
    t = c.at_working_twist()
    return (t.c1, -t.rk)


def ku_constraint_holds(c: B0Char) -> bool:
    t = c.at_working_twist()
    return t.c2 == KU_C2_PER_RANK * t.rk


# span of ch^{-1}(B_i) for i = -1, 0, 1
CLIFFORD_BASIS = LatticeBasis.of((4, 1, Fraction(1, 8)), (0, 2, 0), (0, 0, 1))

PSI_LAMBDA1 = B0Char.of(4, 3, Fraction(-7, 8))
PSI_LAMBDA2 = B0Char.of(-8, 0, Fraction(7, 4))


def psi_rho_image(a: RatLike, b: RatLike) -> B0Char:
    """Image of ``a lambda_1 + b lambda_2`` in the twisted B0 lattice."""
    return PSI_LAMBDA1 * rat(a) + PSI_LAMBDA2 * rat(b)


def lattice_coords(c: B0Char, basis: LatticeBasis = CLIFFORD_BASIS) -> Tuple[int, int, int]:
    """Integer coordinates of ``c`` in ``basis``; raises IntegralityError otherwise."""
    coords = _solve3(basis.matrix(), c.at_working_twist().triple())
    if any(x.denominator != 1 for x in coords):
        raise IntegralityError(coords)
    return tuple(int(x) for x in coords)


def is_lattice_integral(c: B0Char, basis: LatticeBasis = CLIFFORD_BASIS) -> bool:
    try:
        lattice_coords(c, basis)
    except IntegralityError:
        return False
    return True


def in_tilt_heart(c: B0Char, beta: RatLike) -> Optional[bool]:
    """Numerical heart test: sheaf-like characters need positive twisted c1.

    Returns None on the boundary ``ch^beta_1 = 0``, where the character alone
    does not decide membership.
    """
    t = twist(c, beta)
    if t.c1 == 0:
        return None
    return t.c1 > 0
