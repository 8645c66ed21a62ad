import logging
from dataclasses import dataclass

from problem import Classification, Problem, ProblemKind, classify
from .base_solver import BaseSolver
from .division import CompetitiveDivision
from .negative_solver import NegativeSolver, has_maximal_face
from .null_solver import NullSolver
from .positive_solver import PositiveSolver

logger = logging.getLogger(__name__)

SOLVERS: dict[ProblemKind, type[BaseSolver]] = {
    ProblemKind.POSITIVE: PositiveSolver,
    ProblemKind.NEGATIVE: NegativeSolver,
    ProblemKind.NULL: NullSolver,
}


@dataclass(frozen=True)
class SolveOutcome:
    classification: Classification
    divisions: list[CompetitiveDivision]
    allocation_count: int
    maximal_face: list[bool]

    @property
    def kind(self) -> ProblemKind:
        return self.classification.kind


def solve_cr(p: Problem) -> SolveOutcome:
    """
    Classifies the problem and runs the matching competitive solver.

    Args:
        p (Problem): The problem.

    Returns:
        SolveOutcome: Every competitive division, sorted by profile, with the
            number of distinct vertex allocations seen and, for negative
            problems, whether each profile sits on a face of maximal dimension.
    """
    classification = classify(p)
    solver = SOLVERS[classification.kind](p, classification)
    divisions = solver.solve()
    if classification.kind is ProblemKind.NEGATIVE:
        maximal_face = [has_maximal_face(p, d.profile) for d in divisions]
    else:
        maximal_face = [True] * len(divisions)
    logger.info(
        f"{classification.kind.value} problem: {len(divisions)} divisions, {solver.allocation_count} vertex allocations"
    )
    return SolveOutcome(classification, divisions, solver.allocation_count, maximal_face)
