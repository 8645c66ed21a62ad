from .rational import to_rat, format_rat, rat_vector, rat_matrix, dot
from .simplex import LinearProgram, LpResult, LpStatus, LpBuilder, lp_solve
from .linear_system import solve_exact
