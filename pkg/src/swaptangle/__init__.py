"""swaptangle: generate, solve, verify and compare edge-swap untangling puzzles."""

from .geom import (
    COLLINEAR,
    GRID_SIZE,
    INSIDE,
    LEFT,
    ON,
    OUTSIDE,
    RIGHT,
    convex_hull,
    delta_ok,
    forbidden_region_violated,
    in_circle,
    orient,
    segments_cross,
)
from .pointgen import (
    PointGenError,
    PointGenParams,
    PointGenStats,
    generate_points,
    validate_delta_general_position,
)
from .triangulate import Triangulation, delaunay, flip_edge, lawson_flips
from .puzzle import (
    GenerationMeta,
    InstanceFormatError,
    PuzzleInstance,
    RenderMetrics,
    SwapMove,
    apply_swap,
    crossing_count,
    crossing_pairs,
    dumps_instance,
    is_solved,
    load_instance,
    loads_instance,
    make_basic_construction_fixture,
    make_cycle_fixture,
    make_eight_cycle_fixture,
    make_instance,
    save_instance,
    validate,
)
from .solve import (
    EnumerationGuardError,
    SearchResourceError,
    SolveReport,
    UnreachableTargetError,
    enumeration_size,
    exhaustive_solvable,
    independent,
    min_swaps,
    route_plan,
    route_to_assignment,
)
from .generate import (
    GenerationError,
    GenerationParams,
    GenerationResult,
    ShuffleBudgetError,
    generate_level,
    remove_edges,
    shuffle,
)
from .equiv import (
    EQUIVALENT,
    INAPPLICABLE,
    NOT_EQUIVALENT,
    EquivalenceCertificate,
    definition_oracle,
    discrepancy_walk,
    same_order_type,
    swap_equivalent,
)

__version__ = "0.1.0"
