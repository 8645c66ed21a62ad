DEFAULT_RESOLUTION = 200
DEFAULT_TOLERANCE = 1e-6

# Residual lower bounds: positive directions on a coarse simplex grid
BOUND_RESOLUTION = 40
BOUND_CHUNK = 2048  # profiles per matrix product
# LP only where bound <= PRUNE_MARGIN * (profile change across one grid step)
PRUNE_MARGIN = 4.0

# Polished profiles closer than this (max-norm) are one critical point
CLUSTER_DISTANCE = 1e-4
POLISH_XATOL = 1e-12
POLISH_MAXITER = 4000

ENTRY_RANGE = 9
PERTURBATION_DENOMINATOR = 1000
SEARCH_ATTEMPTS = 500
