"""Exact numerical invariants for the Kuznetsov component of a cubic fourfold."""

from .clifford import (
    CLIFFORD_BASIS,
    B0Char,
    IntegralityError,
    LatticeBasis,
    NotInHeartError,
    SlopePoly,
    TiltParams,
    b_char,
    discriminant,
    ku_constraint_holds,
    lattice_coords,
    psi_rho_image,
    slope_mu,
    slope_mu_poly,
    twist,
)
from .riemann_roch import (
    CurveData,
    KClass,
    euler_pairing,
    lambda_classes,
    line_bundle,
    mukai_pairing,
    project_ku,
)
from .ring import GradedClass, VarietyId, hrr_chi, integrate, todd
from .verify import run_verify
from .walls import (
    WallProblem,
    WallSolution,
    check_solution,
    enumerate_walls,
    enumerate_walls_report,
    solve_alpha_sq,
)

__all__ = [
    "CLIFFORD_BASIS", "B0Char", "IntegralityError", "LatticeBasis", "NotInHeartError",
    "SlopePoly", "TiltParams", "b_char", "discriminant", "ku_constraint_holds",
    "lattice_coords", "psi_rho_image", "slope_mu", "slope_mu_poly", "twist",
    "CurveData", "KClass", "euler_pairing", "lambda_classes", "line_bundle",
    "mukai_pairing", "project_ku", "GradedClass", "VarietyId", "hrr_chi",
    "integrate", "todd", "run_verify", "WallProblem", "WallSolution",
    "check_solution", "enumerate_walls", "enumerate_walls_report", "solve_alpha_sq",
]
