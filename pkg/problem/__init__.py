from .problem import (
    Problem,
    Partitions,
    Allocation,
    UtilityProfile,
    partition,
    normalize_ilb,
    utility_profile,
    without_null_columns,
)
from .classification import (
    Classification,
    ProblemKind,
    classify,
    allocation_variables,
    allocation_from_primal,
)
from .welfare import (
    welfare_optimum,
    pareto_improvement,
    efficiency_check,
    face_dimension,
    pareto_frontier,
)
