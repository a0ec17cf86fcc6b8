"""Planar Quickhull with pluggable farthest-point reductions, exact
oracles, and the experiments that measure its numerical stability."""

from .chain import BACKEND as CHAIN_BACKEND
from .experiments import (
    BoundViolation,
    ExperimentRecord,
    McConfig,
    forward_error_experiment,
    injection_experiment,
    monte_carlo_experiment,
    monte_carlo_trial,
)
from .generators import (
    DistanceSequence,
    GeneratorKind,
    GeneratorSpec,
    LadderInstance,
    generate,
    ladder_instance,
    mc_distance_ladder,
    permute,
)
from .geometry import (
    EPS_DOUBLE,
    EPS_SINGLE,
    GAMMA6,
    DirectedSegment,
    Point,
    distance_to_line,
    farther_exact,
    farther_float,
    gamma,
    max_abs_coord,
    orient_exact,
    right_turn_exact,
    right_turn_float,
)
from .metrics import (
    ErrorReport,
    conditioning_check,
    forward_error,
    hausdorff,
    reduction_bound,
    scaled_hausdorff,
)
from .quickhull import (
    Hull,
    PredicateMode,
    brute_force_hull,
    is_convex_clockwise,
    quickhull,
)
from .reduction import (
    AdversarialWithinTolerance,
    Blocked,
    ExactPredicate,
    FloatPredicate,
    Pairwise,
    RandomWithinTolerance,
    ReductionStrategy,
    Sequential,
    reduce_blocked,
    reduce_farthest,
    reduce_pairwise,
    reduce_sequential,
    reduction_error,
)

__version__ = "0.1.0"
