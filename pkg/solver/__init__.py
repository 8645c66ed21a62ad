from .division import CompetitiveDivision, SeparatingWeights
from .base_solver import BaseSolver
from .positive_solver import (
    PositiveSolver,
    solve_positive,
    nash_optimum,
    certify_nash_optimum,
    hyperplane_value,
)
from .negative_solver import (
    NegativeSolver,
    solve_negative,
    criticality_check,
    has_maximal_face,
    nash_maximal,
    frontier_nash_maximum,
)
from .null_solver import NullSolver, solve_null, separating_weights, separation_value
from .competitive_rule import SolveOutcome, solve_cr
