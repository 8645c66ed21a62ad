import asyncio
import logging
from fractions import Fraction

from fileio import SweepSpec, default_sweep_spec, load_sweep
from numerics import format_rat
from problem import Problem, without_null_columns
from solver import solve_cr
from type_defs import SweepPayload, SweepRow
from .base_command import EXIT_OK, BaseCommand

logger = logging.getLogger(__name__)


def sweep_row(spec: SweepSpec, value: Fraction) -> SweepRow:
    """
    Classifies and solves the problem obtained by writing value into the sweep column.

    A column that becomes null is dropped. Failures are recorded in the row.
    """
    row: SweepRow = {
        "value": format_rat(value),
        "kind": None,
        "count": 0,
        "vertexAllocations": 0,
        "profiles": [],
        "error": None,
    }
    try:
        items, rows = without_null_columns(spec.items, spec.rows_at(value))
        outcome = solve_cr(Problem(spec.agents, items, rows))
    except (ValueError, RuntimeError) as e:
        logger.error(f"sweep value {value} failed: {e}")
        row["error"] = str(e)
        return row
    row["kind"] = outcome.kind.value
    row["count"] = len(outcome.divisions)
    row["vertexAllocations"] = outcome.allocation_count
    row["profiles"] = [[format_rat(x) for x in d.profile] for d in outcome.divisions]
    return row


async def run_sweep(spec: SweepSpec) -> SweepPayload:
    rows = await asyncio.gather(*[asyncio.to_thread(sweep_row, spec, value) for value in spec.values])
    return {
        "rows": list(rows),
        "counts": [row["count"] for row in rows if row["error"] is None],
    }


class SweepCommand(BaseCommand):
    name = "sweep"

    async def execute(self) -> int:
        spec = await load_sweep(self.args.file) if self.args.file else default_sweep_spec()
        logger.info(
            f"sweeping item {spec.items[spec.column]} over {[format_rat(v) for v in spec.values]}"
        )
        await self.emit(await run_sweep(spec), SweepPayload)
        return EXIT_OK
