from ._checkers import Descriptor, Validator
from ._errors import BracketError, DimensionError, PreconditionError, RootFindingError, ValidatorError
from .core import (
    PointXXR,
    ProblemParams,
    check_dimension,
    objective,
    residual_C,
    residual_Ctilde,
    weighted_distance,
    weighted_norm,
)
from .cross import ConvergenceRow, convergence_report, liminf_witness, project_cross, project_cross_tilde
from .intervals import MULTIPLIER_INTERVAL, NumberLine, Range
from .oracle import OracleCheck, OracleResult, oracle_check, oracle_distance, oracle_project_tilde
from .proj_c import dispatch_case_c, image_of_set, project_c
from .proj_tilde import (
    CaseLabel,
    ProjectionOutcome,
    ProjectionSet,
    SetKind,
    check_kkt,
    distance_to_set,
    members_equidistant,
    project_tilde,
    sample_members,
)
from .rootfind import (
    RootReport,
    cubic_g1,
    cubic_g2,
    quintic_g,
    solve_cubic_g1,
    solve_cubic_g2,
    solve_quintic,
    solve_quintic_norms,
)
from .transform import apply_A, apply_At

__all__ = ["MULTIPLIER_INTERVAL"]
__all_exports = [
    ValidatorError,
    DimensionError,
    PreconditionError,
    RootFindingError,
    BracketError,
    Descriptor,
    Validator,
    NumberLine,
    Range,
    ProblemParams,
    PointXXR,
    check_dimension,
    weighted_norm,
    weighted_distance,
    objective,
    residual_C,
    residual_Ctilde,
    apply_A,
    apply_At,
    RootReport,
    quintic_g,
    cubic_g1,
    cubic_g2,
    solve_quintic,
    solve_quintic_norms,
    solve_cubic_g1,
    solve_cubic_g2,
    SetKind,
    CaseLabel,
    ProjectionSet,
    ProjectionOutcome,
    project_tilde,
    sample_members,
    check_kkt,
    distance_to_set,
    members_equidistant,
    project_c,
    dispatch_case_c,
    image_of_set,
    project_cross_tilde,
    project_cross,
    ConvergenceRow,
    convergence_report,
    liminf_witness,
    OracleResult,
    OracleCheck,
    oracle_project_tilde,
    oracle_distance,
    oracle_check,
]

for _e in __all_exports:
    _e.__module__ = __name__

__all__ += [e.__name__ for e in __all_exports]
