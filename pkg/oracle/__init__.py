from .grid_oracle import (
    GridSpec,
    MembershipOracle,
    grid_critical_points,
    cluster_profiles,
    match_profiles,
    simplex_grid,
    bound_directions,
)
from .random_problem import random_problem, perturb_problem, search_multiplicity
