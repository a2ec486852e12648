"""Numerical walls for tilt stability along a vertical line ``beta = -1``.

A wall for a target character ``v`` is a splitting ``v = sub + quot`` into
lattice characters such that

(a) both pieces have non-negative discriminant,
(b) both pieces are integral in the lattice basis,
(c) their tilt slopes agree for some ``alpha^2 > 0`` (so ``0 < c1(sub) < c1(v)``),
(d) ``sub`` is the destabilizing piece: ``rk(sub)/c1(sub) > rk(v)/c1(v)``.

Sub-characters are written ``(rank_step * a, b * c1_step, c * c2_step)``;
for the Clifford basis the steps are ``(4, 1, 1/8)``, so ``sub = (4a, b, c/8)``.

With ``k = rk(sub) c1(v) - rk(v) c1(sub)`` condition (d) is ``k > 0`` and the
slope equation gives ``alpha^2 = 2 (c2(sub) c1(v) - c2(v) c1(sub)) / k``.
For ``k > 0`` the discriminant inequalities cut ``c2(sub)`` down to a bounded
interval, and the rank of ``sub`` is confined to a finite window, which is
what makes the enumeration exhaustive.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Tuple

from .clifford import (
    CLIFFORD_BASIS,
    WORKING_TWIST,
    B0Char,
    IntegralityError,
    LatticeBasis,
    NotInHeartError,
    TiltParams,
    discriminant,
    lattice_coords,
    slope_mu,
    slope_mu_poly,
)
from .ring import format_rat


@dataclass(frozen=True)
class WallProblem:
    target: B0Char
    basis: LatticeBasis = CLIFFORD_BASIS
    rank_step: int = 4
    beta: Fraction = WORKING_TWIST
    strict_subobject_slope: bool = True

    def __post_init__(self):
        if self.rank_step < 1:
            raise ValueError("rank_step must be a positive integer")
        if Fraction(self.beta) != WORKING_TWIST:
            raise ValueError("walls are only computed at beta = -1")
        object.__setattr__(self, "target", self.target.at_working_twist())
        # raises IntegralityError for targets off the lattice
        lattice_coords(self.target, self.basis)
        if self.target.c1 <= 0:
            raise ValueError("target must have positive ch_1 at beta = -1")


@dataclass(frozen=True)
class WallSolution:
    """One numerical wall. ``alpha_sq`` is None only for boundary splittings."""

    alpha_sq: Optional[Fraction]
    sub: B0Char
    quot: B0Char
    coeffs: Tuple[int, int, int]

    def sort_key(self):
        # descending alpha^2, then (a, b, c)
        return (-(self.alpha_sq or 0), self.coeffs)

    def alpha_approx(self, digits: int = 6) -> Optional[str]:
        """Decimal rendering of ``sqrt(alpha^2)``, for display only."""
        if self.alpha_sq is None:
            return None
        return _sqrt_decimal(self.alpha_sq, digits)

    def to_json(self) -> dict:
        out = {
            "alpha_sq": None if self.alpha_sq is None else format_rat(self.alpha_sq),
            "alpha_approx": None,
            "sub": self.sub.to_json(),
            "quot": self.quot.to_json(),
            "coeffs": list(self.coeffs),
        }
        approx = self.alpha_approx()
        if approx is not None:
            out["alpha_approx"] = float(approx)
        return out


@dataclass
class WallReport:
    walls: List[WallSolution] = field(default_factory=list)
    # splittings with rk(sub)/c1(sub) == rk(v)/c1(v); only filled in non-strict mode
    boundary: List[WallSolution] = field(default_factory=list)


def _sqrt_decimal(x: Fraction, digits: int) -> str:
    # fixed-point integer square root; exact to the printed digits (truncated)
    scale = 10 ** (2 * digits)
    n = math.isqrt(x.numerator * scale // x.denominator)
    s = str(n).rjust(digits + 1, "0")
    return f"{s[:-digits]}.{s[-digits:]}"


def solve_alpha_sq(v1: B0Char, v2: B0Char) -> Optional[Fraction]:
    """The ``alpha^2 > 0`` at which ``v1`` and ``v2`` have equal tilt slope at ``beta = -1``."""
    p1 = slope_mu_poly(v1)
    p2 = slope_mu_poly(v2)
    if p1.alpha_coeff == p2.alpha_coeff:
        return None
    x = (p2.const - p1.const) / (p1.alpha_coeff - p2.alpha_coeff)
    return x if x > 0 else None


def _grid(problem: WallProblem) -> Tuple[Fraction, Fraction, Fraction]:
    _, c1_step, c2_step = problem.basis.steps()
    return Fraction(problem.rank_step), c1_step, c2_step


def rank_window(problem: WallProblem) -> Tuple[int, int]:
    """Range ``a_min..a_max`` of sub-ranks ``rank_step * a`` that can carry a wall.

    Condition (d) forces ``rk(sub) > 0`` or ``rk(quot) < 0``, i.e.
    ``rk(sub) > min(0, R)``. Past ``max(0, R)`` both signs are fixed and the
    discriminant inequalities bound the rank:

    * ``D > 0``: ``D b / C < c2(sub) <= b^2 / (2 rk)`` gives ``rk < C^2 / (2D)``;
    * ``D < 0``: the quotient inequality gives ``|rk(quot)| < C^2 / (2|D|)``;
    * ``D = 0``: ``c2(sub) >= c2_step`` gives ``rk <= C^2 / (2 c2_step)``.
    """
    R, C, D = problem.target.triple()
    step, _, c2_step = _grid(problem)
    lo = min(Fraction(0), R)
    hi = max(Fraction(0), R)
    if D > 0:
        extra = C * C / (2 * D)
    elif D < 0:
        extra = R + C * C / (2 * -D)
    else:
        extra = C * C / (2 * c2_step)
    hi = max(hi, extra)
    a_min = math.floor(lo / step) + 1
    a_max = math.floor(hi / step)
    return a_min, a_max


def _c_interval(problem, r, t) -> Optional[Tuple[int, int]]:
    """Integer range of ``c`` for sub rank ``r`` and ``c1 = t``, assuming ``k > 0``."""
    R, C, D = problem.target.triple()
    _, _, c2_step = _grid(problem)
    rq, tq = R - r, C - t
    # alpha^2 > 0
    lo_strict = D * t / C
    lo = None
    hi = None
    if r > 0:
        hi = t * t / (2 * r)
    elif r < 0:
        lo = t * t / (2 * r)
    if rq > 0:
        b = D - tq * tq / (2 * rq)
        lo = b if lo is None else max(lo, b)
    elif rq < 0:
        b = D - tq * tq / (2 * rq)
        hi = b if hi is None else min(hi, b)
    if hi is None:
        raise AssertionError("k > 0 must bound c2(sub) from above")
    c_min = math.floor(lo_strict / c2_step) + 1
    if lo is not None:
        c_min = max(c_min, math.ceil(lo / c2_step))
    c_max = math.floor(hi / c2_step)
    if c_min > c_max:
        return None
    return c_min, c_max


def _split(problem, a, b, c):
    step, c1_step, c2_step = _grid(problem)
    sub = B0Char(step * a, c1_step * b, c2_step * c, WORKING_TWIST)
    return sub, problem.target - sub


def _cell(problem: WallProblem, a: int) -> Tuple[list, list]:
    """All walls (and boundary splittings) with sub rank ``rank_step * a``."""
    R, C, D = problem.target.triple()
    step, c1_step, c2_step = _grid(problem)
    r = step * a
    walls, boundary = [], []
    b_max = math.ceil(C / c1_step) - 1
    for b in range(1, b_max + 1):
        t = c1_step * b
        k = r * C - R * t
        if k < 0:
            continue
        if k == 0:
            if problem.strict_subobject_slope:
                continue
            # slope functions agree identically iff sub is proportional to v
            s = D * t / C
            if (s / c2_step).denominator != 1:
                continue
            sub, quot = _split(problem, a, b, int(s / c2_step))
            if _admissible(problem, sub, quot):
                boundary.append(WallSolution(None, sub, quot, (a, b, int(s / c2_step))))
            continue
        interval = _c_interval(problem, r, t)
        if interval is None:
            continue
        for c in range(interval[0], interval[1] + 1):
            sub, quot = _split(problem, a, b, c)
            if not _admissible(problem, sub, quot):
                continue
            alpha_sq = solve_alpha_sq(sub, quot)
            if alpha_sq is None:
                continue
            walls.append(WallSolution(alpha_sq, sub, quot, (a, b, c)))
    return walls, boundary


def _admissible(problem, sub, quot) -> bool:
    if discriminant(sub) < 0 or discriminant(quot) < 0:
        return False
    try:
        lattice_coords(sub, problem.basis)
    except IntegralityError:
        return False
    return True


def enumerate_walls_report(problem: WallProblem, jobs: int = 1) -> WallReport:
    a_min, a_max = rank_window(problem)
    cells = range(a_min, a_max + 1)
    if jobs > 1 and len(cells) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_cell, [problem] * len(cells), cells))
    else:
        results = [_cell(problem, a) for a in cells]
    report = WallReport()
    for walls, boundary in results:
        report.walls.extend(walls)
        report.boundary.extend(boundary)
    report.walls.sort(key=WallSolution.sort_key)
    report.boundary.sort(key=WallSolution.sort_key)
    return report


def enumerate_walls(problem: WallProblem, jobs: int = 1) -> List[WallSolution]:
    return enumerate_walls_report(problem, jobs).walls


def check_solution(problem: WallProblem, s: WallSolution) -> bool:
    """Re-validate a wall from scratch, independently of the enumerator."""
    target = problem.target
    sub, quot = s.sub.at_working_twist(), s.quot.at_working_twist()
    if sub + quot != target:
        return False
    step, c1_step, c2_step = _grid(problem)
    a, b, c = s.coeffs
    if sub.triple() != (step * a, c1_step * b, c2_step * c):
        return False
    for piece in (sub, quot):
        if discriminant(piece) < 0:
            return False
        try:
            lattice_coords(piece, problem.basis)
        except IntegralityError:
            return False
    if not (0 < sub.c1 < target.c1):
        return False
    # (d) with positive denominators cross-multiplied
    lhs, rhs = sub.rk * target.c1, target.rk * sub.c1
    if problem.strict_subobject_slope and not lhs > rhs:
        return False
    if not lhs >= rhs:
        return False
    if s.alpha_sq is None or s.alpha_sq <= 0:
        return False
    try:
        p = TiltParams(s.alpha_sq, WORKING_TWIST)
        return slope_mu(sub, p) == slope_mu(quot, p)
    except NotInHeartError:
        return False
