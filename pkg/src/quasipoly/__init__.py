"""U-polygons of class >= 4 in planar cyclotomic model sets.

Exact cyclotomic-integer arithmetic, cut-and-project point set generation,
U-polygon decision and construction, and discrete parallel X-rays.
"""

__version__ = "0.1.0"

from .construct import (
    Homothety,
    affine_hexagon,
    affine_parallelogram,
    affinely_regular_polygon_in_ring,
    attach_translates,
    construct_u_polygon_in_model_set,
    construct_u_polygon_ring,
    embed_in_model_set,
    pisot_scaler,
    regular_polygon_exact,
)
from .cyclo import CycInt, cyclotomic_polynomial, galois_apply, is_parallel, phi
from .errors import BudgetExceeded, Inadmissible, SearchFailed
from .fields import (
    admissible_by_divisibility,
    admissible_by_field_inclusion,
    admissible_edge_numbers,
    canonicalize,
    cyclotomic_inclusion,
    is_sophie_germain,
    special_case_edge_numbers,
)
from .geometry import (
    AffineMap,
    Direction,
    DirectionSet,
    Polygon,
    XRayTable,
    affine_regularity_residual,
    alternate_vertex_split,
    consecutive_edge_cross_ratio_regular,
    cross_ratio,
    cross_ratio_of_directions,
    cross_ratio_of_vectors,
    darboux_iterate,
    edge_directions,
    is_u_polygon,
    midpoint_polygon,
    u_class,
    xray,
    xray_equal,
)
from .modelset import (
    BallWindow,
    BoxWindow,
    ModelSetSpec,
    PointSet,
    PRESETS,
    contains,
    default_automorphism_reps,
    delone_diagnostics,
    generate,
    make_spec,
    preset_spec,
    star_map,
)
