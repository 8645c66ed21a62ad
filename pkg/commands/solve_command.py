import asyncio
import logging

from baselines import egalitarian, fair_share
from fileio import division_to_payload, load_problem
from numerics import format_rat
from solver import solve_cr
from type_defs import SolvePayload
from .base_command import EXIT_OK, BaseCommand

logger = logging.getLogger(__name__)


class SolveCommand(BaseCommand):
    name = "solve"

    async def execute(self) -> int:
        problem = await load_problem(self.args.file)
        rule = self.args.rule
        match rule:
            case "cr":
                outcome = await asyncio.to_thread(solve_cr, problem)
                payload: SolvePayload = {
                    "kind": outcome.kind.value,
                    "rule": rule,
                    "divisions": [division_to_payload(d) for d in outcome.divisions],
                    "profile": None,
                    "maximalFace": outcome.maximal_face,
                }
            case "er" | "fs":
                rule_fn = egalitarian if rule == "er" else fair_share
                profile = await asyncio.to_thread(rule_fn, problem)
                payload = {
                    "kind": None,
                    "rule": rule,
                    "divisions": [],
                    "profile": [format_rat(x) for x in profile],
                    "maximalFace": [],
                }
            case _:
                raise ValueError(f"Unknown rule: {rule}")
        await self.emit(payload, SolvePayload)
        return EXIT_OK
