"""Regression report against reference values.

Expected values live in ``data/verify_checks.json``; each entry names a
computation registered below. Two entries record values that disagree with
each other in the source material; those carry status
``paper_internal_discrepancy`` whatever the engine computes and never fail
the run.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from functools import lru_cache
from typing import Callable, Dict, List, Optional, Union

from . import clifford as cl
from . import riemann_roch as rr
from .ring import P3, exp_class, format_rat, graded, integrate, todd
from .walls import WallProblem, enumerate_walls, solve_alpha_sq, check_solution

PASS = "pass"
FAIL = "fail"
DISCREPANCY = "paper_internal_discrepancy"

TARGET = cl.B0Char.of(-8, 6, Fraction(7, 4))


def fmt(x) -> str:
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, Fraction):
        return format_rat(x)
    if isinstance(x, int):
        return str(x)
    if isinstance(x, (tuple, list)):
        return "(" + ", ".join(fmt(v) for v in x) + ")"
    return str(x)


def _poly(p: cl.SlopePoly) -> str:
    return str(p)


@lru_cache(maxsize=None)
def _walls():
    return tuple(enumerate_walls(WallProblem(TARGET)))


def _wall(coeffs):
    for w in _walls():
        if w.coeffs == tuple(coeffs):
            return w
    return None


def _wall_row(w) -> str:
    return f"{format_rat(w.alpha_sq)}:{fmt(w.coeffs)}"


def _wall_case(coeffs) -> Callable[[], str]:
    def compute():
        w = _wall(coeffs)
        if w is None or not check_solution(WallProblem(TARGET), w):
            return "absent"
        return _wall_row(w)

    return compute


def _rrp3_coefficients():
    # chi(F) = sum_k t_k ch_k(F) with t_k = int h^k td; listed as (rk, ch_1, ch_2, ch_3)
    td = todd(P3)
    return fmt(tuple(integrate(graded(P3, [0] * k + [1]) * td) for k in range(4)))


def _lambda_orthogonality():
    l1, l2 = rr.lambda_classes()
    vals = [rr.euler_pairing(rr.line_bundle(i), l) for i in range(3) for l in (l1, l2)]
    return fmt(tuple(vals))


def _chi_gamma():
    cls = rr.curve_class(rr.CurveData(5, 0))
    # an elliptic quintic has chi(O_Gamma) = 0; twisting by mH multiplies ch by exp(mH)
    return fmt(tuple(
        rr.chi(rr.KClass(cls.ch * exp_class(rr.CUBIC, m))) for m in range(4)
    ))


def _im_rotated(c: cl.B0Char) -> str:
    # coefficient form of Im(-i Z_{alpha,-1}) = c2 - alpha^2/2 rk
    return _poly(cl.SlopePoly(c.at_working_twist().c2, -c.rk / 2))


COMPUTATIONS: Dict[str, Callable[[], str]] = {
    "rrp3_coefficients": _rrp3_coefficients,
    "chi_O_Y": lambda: fmt(rr.chi(rr.O_Y)),
    "chi_O_Y_H": lambda: fmt(rr.chi(rr.line_bundle(1))),
    "chi_O_Y_2H": lambda: fmt(rr.chi(rr.line_bundle(2))),
    "chi_O_Gamma_mH": _chi_gamma,
    "ch_lambda1": lambda: fmt(rr.lambda_classes()[0].display()),
    "ch_lambda2": lambda: fmt(rr.lambda_classes()[1].display()),
    "ch_2l1_2l2": lambda: fmt(rr.lambda_combination(2, 2).display()),
    "mukai_l1_l1": lambda: fmt(rr.mukai_pairing(*[rr.lambda_classes()[0]] * 2)),
    "mukai_l1_l2": lambda: fmt(rr.mukai_pairing(*rr.lambda_classes())),
    "mukai_l2_l2": lambda: fmt(rr.mukai_pairing(*[rr.lambda_classes()[1]] * 2)),
    "mukai_l1_plus_l2": lambda: fmt(rr.mukai_pairing(rr.lambda_combination(1, 1), rr.lambda_combination(1, 1))),
    "lambda_orthogonality": _lambda_orthogonality,
    "pr_I_Gamma_H": lambda: fmt(rr.e_gamma_class().display()),
    "p_ell": lambda: fmt(rr.p_ell_class().display()),
    "e_c": lambda: fmt(rr.e_c_class().display()),
    "e_c_in_lambda_basis": lambda: "2l1+2l2" if rr.e_c_class() == rr.lambda_combination(2, 2) else fmt(rr.e_c_class().display()),
    "b_char_1": lambda: fmt(cl.b_char(1).triple()),
    "b1_shift": lambda: fmt((-cl.b_char(1)).triple()),
    "psi_lambda1": lambda: fmt(cl.psi_rho_image(1, 0).triple()),
    "psi_lambda2": lambda: fmt(cl.psi_rho_image(0, 1).triple()),
    "psi_2l1_2l2": lambda: fmt(cl.psi_rho_image(2, 2).triple()),
    "ku_psi_lambda1": lambda: fmt(cl.ku_constraint_holds(cl.psi_rho_image(1, 0))),
    "ku_psi_lambda2": lambda: fmt(cl.ku_constraint_holds(cl.psi_rho_image(0, 1))),
    "reduced_Z_lambda1": lambda: fmt(cl.reduced_Z(cl.psi_rho_image(1, 0))),
    "reduced_Z_2l1_2l2": lambda: fmt(cl.reduced_Z(TARGET)),
    "slope_target": lambda: _poly(cl.slope_mu_poly(TARGET)),
    "im_rotated_Z_lambda1": lambda: _im_rotated(cl.psi_rho_image(1, 0)),
    "slope_b0_shift": lambda: _poly(cl.slope_mu_poly(-cl.b_char(0))),
    "slope_wall1_sub": lambda: _poly(cl.slope_mu_poly(_wall((0, 2, 16)).sub)),
    "slope_wall2iii_sub": lambda: _poly(cl.slope_mu_poly(_wall((0, 2, 8)).sub)),
    "alpha_sq_wall1": lambda: fmt(solve_alpha_sq(cl.B0Char.of(0, 2, 2), cl.B0Char.of(-8, 4, Fraction(-1, 4)))),
    "alpha_sq_wall3": lambda: fmt(solve_alpha_sq(cl.B0Char.of(4, 3, Fraction(9, 8)), cl.B0Char.of(-12, 3, Fraction(5, 8)))),
    "walls_all": lambda: "; ".join(_wall_row(w) for w in _walls()),
    "wall_1": _wall_case((0, 2, 16)),
    "wall_2i": _wall_case((-1, 5, 15)),
    "wall_2ii": _wall_case((0, 4, 16)),
    "wall_2iii": _wall_case((0, 2, 8)),
    "wall_3": _wall_case((1, 3, 9)),
    "walls_quot_rank_bound": lambda: fmt(all(-12 <= w.quot.rk <= 0 for w in _walls())),
    "wall_2i_quot": lambda: fmt(_wall((-1, 5, 15)).quot.triple()),
    "wall_2ii_quot": lambda: fmt(_wall((0, 4, 16)).quot.triple()),
    "wall_1_pieces": lambda: fmt((_wall((0, 2, 16)).sub.triple(), _wall((0, 2, 16)).quot.triple())),
    "wall_3_pieces": lambda: fmt((_wall((1, 3, 9)).sub.triple(), _wall((1, 3, 9)).quot.triple())),
}


@dataclass
class Check:
    name: str
    group: str
    paper_ref: str
    expected: Union[str, List[str]]
    computed: Optional[str]
    status: str

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "group": self.group,
            "paper_ref": self.paper_ref,
            "expected": self.expected,
            "computed": self.computed,
            "status": self.status,
        }


@dataclass
class VerifyReport:
    checks: List[Check] = field(default_factory=list)

    def counts(self) -> Dict[str, int]:
        out = {PASS: 0, FAIL: 0, DISCREPANCY: 0}
        for c in self.checks:
            out[c.status] += 1
        return out

    @property
    def ok(self) -> bool:
        return self.counts()[FAIL] == 0

    def to_json(self) -> dict:
        return {"checks": [c.to_json() for c in self.checks], "summary": self.counts()}


def load_fixture() -> List[dict]:
    text = resources.files("kucalc").joinpath("data/verify_checks.json").read_text()
    return json.loads(text)["checks"]


def groups() -> List[str]:
    return sorted({entry["group"] for entry in load_fixture()})


def run_verify(only: Optional[str] = None) -> VerifyReport:
    report = VerifyReport()
    for entry in load_fixture():
        if only is not None and entry["group"] != only:
            continue
        try:
            computed = COMPUTATIONS[entry["compute"]]()
        except Exception as exc:  # a crashing check is a failing check
            computed = f"error: {type(exc).__name__}: {exc}"
        if "paper_values" in entry:
            expected = list(entry["paper_values"])
            status = DISCREPANCY
        else:
            expected = entry["expected"]
            status = PASS if computed == expected else FAIL
        report.checks.append(
            Check(entry["name"], entry["group"], entry["paper_ref"], expected, computed, status)
        )
    return report
