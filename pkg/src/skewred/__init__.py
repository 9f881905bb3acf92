"""Row reduction of matrices over skew polynomial rings F_{q^s}[x; theta],
with its two decoding applications: multi-sequence skew-feedback shift
register synthesis (interleaved Gabidulin decoding) and the interpolation
step of Mahdavifar-Vardy list decoding.
"""

from .errors import (ChannelError, ConstructionError, ContextError,
                     DependentPointsError, EncodeError, InstanceError,
                     PreconditionError, ShiftError, SingularMatrixError,
                     SkewredError, TransformError, ZeroVectorError)
from .ffield import FiniteField, find_irreducible, make_field
from .gabidulin import (DecodeResult, GabCode, add_rank_error, decode, encode,
                        gao_instance)
from .mglssr import (MgLssrInstance, MgLssrSolution, build_basis,
                     coefficient_query, demand_driven_solve,
                     intermediate_solve, is_solution, solve)
from .mvinterp import (MvInstance, MvSolution, chi, degree_bounds,
                       interpolation_step, verify, weight_vector)
from .rowreduce import (ReductionTrace, deg_det, in_row_space,
                        mulders_storjohann, orthogonality_defect,
                        reduce_shifted, walk, walk_step)
from .skewmat import SkewMatrix, apply_shift, is_shifted_weak_popov, \
    is_weak_popov, unapply_shift
from .skewpoly import MINUS_INFINITY, SkewPoly, annihilator, interpolate

__version__ = "0.1.0"

__all__ = [
    "MINUS_INFINITY", "ChannelError", "ConstructionError", "ContextError",
    "DecodeResult", "DependentPointsError", "EncodeError", "FiniteField",
    "GabCode", "InstanceError", "MgLssrInstance", "MgLssrSolution",
    "MvInstance", "MvSolution", "PreconditionError", "ReductionTrace",
    "ShiftError", "SingularMatrixError", "SkewMatrix", "SkewPoly",
    "SkewredError", "TransformError", "ZeroVectorError", "add_rank_error",
    "annihilator", "apply_shift", "build_basis", "chi", "coefficient_query",
    "decode", "deg_det", "degree_bounds", "demand_driven_solve", "encode",
    "find_irreducible", "gao_instance", "in_row_space", "interpolate",
    "interpolation_step", "intermediate_solve", "is_shifted_weak_popov",
    "is_solution", "is_weak_popov", "make_field", "mulders_storjohann",
    "orthogonality_defect", "reduce_shifted", "solve", "unapply_shift",
    "verify", "walk", "walk_step", "weight_vector",
]
