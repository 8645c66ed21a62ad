import json
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

import aiofiles
from typeguard import CollectionCheckStrategy, TypeCheckError, check_type

from errors import ProblemError, ProblemFileError
from numerics import format_rat, to_rat
from problem import Allocation, Problem, utility_profile
from problem.problem import default_agent_names, default_item_names
from solver import CompetitiveDivision
from type_defs import DivisionDoc, DivisionPayload, ProblemDoc, SweepDoc

logger = logging.getLogger(__name__)

DEFAULT_SWEEP_VALUES = tuple(Fraction(c) for c in range(4, -4, -1))


@dataclass(frozen=True)
class SweepSpec:
    """
    A base matrix with one designated column and the values it runs through.

    The base column itself may be null; only the substituted problems are validated.
    """

    agents: tuple[str, ...]
    items: tuple[str, ...]
    rows: tuple[tuple[Fraction, ...], ...]
    column: int
    values: tuple[Fraction, ...] = field(default=DEFAULT_SWEEP_VALUES)

    def __post_init__(self) -> None:
        if not 0 <= self.column < len(self.items):
            raise ValueError(f"Sweep column {self.column} is outside the {len(self.items)} items")
        if not self.values:
            raise ValueError("A sweep needs at least one parameter value")
        if any(len(row) != len(self.items) for row in self.rows) or len(self.rows) != len(self.agents):
            raise ValueError("Sweep base matrix does not match the agent and item names")

    def rows_at(self, value: Fraction) -> list[list[Fraction]]:
        return [
            [value if a == self.column else x for a, x in enumerate(row)] for row in self.rows
        ]


def default_sweep_spec() -> SweepSpec:
    """u_1 = (-1, -3, c), u_2 = (-2, -1, c) with c running from 4 down to -3."""
    return SweepSpec(
        agents=default_agent_names(2),
        items=("a", "b", "c"),
        rows=(
            (Fraction(-1), Fraction(-3), Fraction(0)),
            (Fraction(-2), Fraction(-1), Fraction(0)),
        ),
        column=2,
    )


def _validated(doc: Any, shape: type, path: str) -> Any:
    try:
        check_type(doc, shape, collection_check_strategy=CollectionCheckStrategy.ALL_ITEMS)
    except TypeCheckError as e:
        raise ProblemFileError(path, f"not a valid {shape.__name__}: {e}") from e
    return doc


def _rationals(values: list, path: str, what: str) -> list[Fraction]:
    try:
        return [to_rat(v) for v in values]
    except ValueError as e:
        raise ProblemFileError(path, f"{what}: {e}") from e


async def read_json(path: str) -> Any:
    """
    Reads and decodes one JSON document.

    Raises:
        ProblemFileError: The file is unreadable or not valid JSON; syntax
            errors carry their line number.
    """
    try:
        async with aiofiles.open(path, "r") as f:
            text = await f.read()
    except OSError as e:
        raise ProblemFileError(path, f"cannot read file: {e.strerror}") from e
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise ProblemFileError(path, e.msg, e.lineno) from e


async def write_text(path: str, text: str) -> None:
    async with aiofiles.open(path, "w") as f:
        await f.write(text)


def parse_problem(doc: Any, path: str = "<document>") -> Problem:
    """
    Validates a problem document and builds the Problem.

    Args:
        doc (Any): Decoded JSON.
        path (str, optional): Source name used in error messages.

    Returns:
        Problem: The validated problem.
    """
    doc = _validated(doc, ProblemDoc, path)
    rows = [_rationals(row, path, "utilities") for row in doc["utilities"]]
    try:
        return Problem(tuple(doc["agents"]), tuple(doc["items"]), rows)
    except ProblemError as e:
        raise ProblemFileError(path, str(e)) from e


def parse_division(
    doc: Any, p: Problem, path: str = "<document>"
) -> tuple[Allocation, tuple[Fraction, ...], int]:
    """
    Validates a division document against the problem it divides.

    The optional profile key, as printed by solve, must match the utilities
    the allocation gives.

    Returns:
        tuple[Allocation, tuple[Fraction, ...], int]: Allocation, prices and budget sign.
    """
    doc = _validated(doc, DivisionDoc, path)
    rows = [_rationals(row, path, "allocation") for row in doc["allocation"]]
    prices = tuple(_rationals(doc["prices"], path, "prices"))
    if isinstance(doc["budget"], bool) or doc["budget"] not in (-1, 0, 1):
        raise ProblemFileError(path, f"budget must be -1, 0 or 1, got {doc['budget']}")
    if len(rows) != p.n or any(len(row) != p.m for row in rows) or len(prices) != p.m:
        raise ProblemFileError(
            path, f"division does not match a problem with {p.n} agents and {p.m} items"
        )
    try:
        allocation = Allocation(rows)
    except ProblemError as e:
        raise ProblemFileError(path, str(e)) from e
    if "profile" in doc:
        profile = tuple(_rationals(doc["profile"], path, "profile"))
        if profile != utility_profile(p, allocation):
            raise ProblemFileError(
                path, f"profile {doc['profile']} does not match the allocation's utilities"
            )
    return allocation, prices, doc["budget"]


def parse_sweep(doc: Any, path: str = "<document>") -> SweepSpec:
    doc = _validated(doc, SweepDoc, path)
    base = doc["base"]
    if doc["column"] not in base["items"]:
        raise ProblemFileError(path, f"sweep column {doc['column']!r} is not an item of the base problem")
    try:
        return SweepSpec(
            agents=tuple(base["agents"]),
            items=tuple(base["items"]),
            rows=tuple(tuple(_rationals(row, path, "utilities")) for row in base["utilities"]),
            column=base["items"].index(doc["column"]),
            values=tuple(_rationals(doc["values"], path, "values")),
        )
    except ValueError as e:
        if isinstance(e, ProblemFileError):
            raise
        raise ProblemFileError(path, str(e)) from e


async def load_problem(path: str) -> Problem:
    problem = parse_problem(await read_json(path), path)
    logger.info(f"loaded {problem.n}x{problem.m} problem from {path}")
    return problem


async def load_division(path: str, p: Problem) -> tuple[Allocation, tuple[Fraction, ...], int]:
    return parse_division(await read_json(path), p, path)


async def load_sweep(path: str) -> SweepSpec:
    return parse_sweep(await read_json(path), path)


def problem_to_doc(p: Problem) -> ProblemDoc:
    return {
        "agents": list(p.agents),
        "items": list(p.items),
        "utilities": [[format_rat(x) for x in row] for row in p.rows()],
    }


def division_to_payload(d: CompetitiveDivision) -> DivisionPayload:
    return {
        "allocation": [[format_rat(x) for x in row] for row in d.allocation.rows()],
        "prices": [format_rat(x) for x in d.prices],
        "budget": d.budget,
        "profile": [format_rat(x) for x in d.profile],
    }
