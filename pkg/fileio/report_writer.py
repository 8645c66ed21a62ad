import csv
import io
import logging

from matplotlib.figure import Figure

from baselines import egalitarian, fair_share
from errors import NonPlottableError
from numerics import format_rat, to_rat
from problem import Problem, pareto_frontier
from solver import solve_cr
from type_defs import ReportRow

logger = logging.getLogger(__name__)

FIELDS = ("label", "U1", "U2")


def report_rows(p: Problem) -> list[ReportRow]:
    """
    Points of the two-agent comparison plot: the efficient frontier, CR, ER and FS.

    Competitive profiles are labelled CR (CR1, CR2, ... when there are several).

    Args:
        p (Problem): A two-agent problem.

    Raises:
        NonPlottableError: The problem does not have exactly two agents.

    Returns:
        list[ReportRow]: Rows with exact rational coordinates.
    """
    if p.n != 2:
        raise NonPlottableError(f"Reports plot two agents, got {p.n}")
    rows: list[ReportRow] = []

    def add(label, profile) -> None:
        rows.append({"label": label, "U1": format_rat(profile[0]), "U2": format_rat(profile[1])})

    for vertex in pareto_frontier(p):
        add("frontier", vertex)
    divisions = solve_cr(p).divisions
    for k, division in enumerate(divisions, start=1):
        add("CR" if len(divisions) == 1 else f"CR{k}", division.profile)
    add("ER", egalitarian(p))
    add("FS", fair_share(p))
    return rows


def rows_to_csv(rows: list[ReportRow]) -> str:
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=FIELDS, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buffer.getvalue()


def rows_to_svg(rows: list[ReportRow], title: str = "") -> str:
    """Renders the frontier polyline, competitive points (circles), ER (square) and FS (triangle)."""

    def coordinates(selected: list[ReportRow]) -> tuple[list[float], list[float]]:
        return [float(to_rat(r["U1"])) for r in selected], [float(to_rat(r["U2"])) for r in selected]

    frontier = [r for r in rows if r["label"] == "frontier"]
    competitive = [r for r in rows if r["label"].startswith("CR")]
    fig = Figure(figsize=(5, 5))
    ax = fig.subplots()
    ax.plot(*coordinates(frontier), color="black", linewidth=1, label="frontier")
    ax.scatter(*coordinates(competitive), marker="o", s=60, label="CR")
    ax.scatter(*coordinates([r for r in rows if r["label"] == "ER"]), marker="s", s=60, label="ER")
    ax.scatter(*coordinates([r for r in rows if r["label"] == "FS"]), marker="^", s=60, label="FS")
    ax.axhline(0, color="grey", linewidth=0.5)
    ax.axvline(0, color="grey", linewidth=0.5)
    ax.set_xlabel("U1")
    ax.set_ylabel("U2")
    if title:
        ax.set_title(title)
    ax.legend()

    buffer = io.StringIO()
    fig.savefig(buffer, format="svg")
    logger.debug(f"rendered {len(rows)} report points")
    return buffer.getvalue()
