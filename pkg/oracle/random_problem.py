import logging
from fractions import Fraction

import numpy as np

from problem import Problem, ProblemKind, classify
from solver import SolveOutcome, solve_cr
from .oracle_config import ENTRY_RANGE, PERTURBATION_DENOMINATOR, SEARCH_ATTEMPTS

logger = logging.getLogger(__name__)


def random_problem(n_agents: int, n_items: int, seed: int, mix: float) -> Problem:
    """
    Draws an integer problem with entries in [-ENTRY_RANGE, ENTRY_RANGE].

    Each column is, with probability mix, a bad for everyone (entries in
    [-ENTRY_RANGE, -1]); otherwise it is redrawn until some agent likes it.

    Args:
        n_agents (int): Number of agents, at least 1.
        n_items (int): Number of items, at least 1.
        seed (int): Seed of the numpy generator; equal seeds give equal problems.
        mix (float): Probability that a column is all-negative.

    Returns:
        Problem: The random problem.
    """
    if n_agents < 1 or n_items < 1:
        raise ValueError(f"Need at least one agent and one item, got {n_agents}x{n_items}")
    if not 0 <= mix <= 1:
        raise ValueError(f"mix must lie in [0, 1], got {mix}")
    rng = np.random.default_rng(seed)
    columns = []
    for _ in range(n_items):
        if rng.random() < mix:
            column = rng.integers(-ENTRY_RANGE, 0, size=n_agents)
        else:
            column = rng.integers(-ENTRY_RANGE, ENTRY_RANGE + 1, size=n_agents)
            while not (column > 0).any():
                column = rng.integers(-ENTRY_RANGE, ENTRY_RANGE + 1, size=n_agents)
        columns.append(column)
    rows = [[Fraction(int(columns[a][i])) for a in range(n_items)] for i in range(n_agents)]
    return Problem.from_rows(rows)


def perturb_problem(p: Problem, seed: int) -> Problem:
    """
    Shifts every nonzero entry by a small rational k/PERTURBATION_DENOMINATOR, |k| <= 9.

    Breaks utility-ratio ties between agents without changing any sign.
    """
    rng = np.random.default_rng(seed)
    offsets = rng.integers(-9, 10, size=(p.n, p.m))
    rows = [
        [
            x + Fraction(int(offsets[i, a]), PERTURBATION_DENOMINATOR) if x != 0 else x
            for a, x in enumerate(row)
        ]
        for i, row in enumerate(p.rows())
    ]
    return p.with_utilities(rows)


def search_multiplicity(
    n_agents: int,
    n_items: int,
    min_divisions: int,
    seed: int = 0,
    mix: float = 0.5,
    attempts: int = SEARCH_ATTEMPTS,
) -> tuple[int, Problem, SolveOutcome] | None:
    """
    Scans seeds for a negative problem with at least min_divisions competitive divisions.

    Args:
        n_agents (int): Number of agents.
        n_items (int): Number of items.
        min_divisions (int): Required number of distinct competitive profiles.
        seed (int, optional): First seed tried. Defaults to 0.
        mix (float, optional): Bad-column probability. Defaults to 0.5.
        attempts (int, optional): Number of seeds tried. Defaults to SEARCH_ATTEMPTS.

    Returns:
        tuple[int, Problem, SolveOutcome] | None: Seed, problem and solver outcome,
            or None if no seed qualifies.
    """
    for s in range(seed, seed + attempts):
        p = random_problem(n_agents, n_items, s, mix)
        if classify(p).kind is not ProblemKind.NEGATIVE:
            continue
        outcome = solve_cr(p)
        if len(outcome.divisions) >= min_divisions:
            logger.info(f"seed {s} gives {len(outcome.divisions)} competitive divisions")
            return s, p, outcome
    logger.warning(f"no seed in [{seed}, {seed + attempts}) reached {min_divisions} divisions")
    return None
