import asyncio
import json
import logging

from fileio import problem_to_doc, write_text
from oracle import random_problem, search_multiplicity
from problem import classify
from type_defs import RandomPayload
from .base_command import EXIT_OK, BaseCommand

logger = logging.getLogger(__name__)


class RandomCommand(BaseCommand):
    name = "random"

    async def execute(self) -> int:
        args = self.args
        if args.min_divisions is not None:
            found = await asyncio.to_thread(
                search_multiplicity, args.agents, args.items, args.min_divisions, args.seed, args.mix
            )
            if found is None:
                raise ValueError(
                    f"No negative {args.agents}x{args.items} problem with {args.min_divisions} divisions found"
                )
            seed, problem, outcome = found
            kind, divisions = outcome.kind.value, len(outcome.divisions)
        else:
            seed = args.seed
            problem = random_problem(args.agents, args.items, seed, args.mix)
            kind, divisions = (await asyncio.to_thread(classify, problem)).kind.value, None

        doc = problem_to_doc(problem)
        if args.output:
            await write_text(args.output, json.dumps(doc, indent=2) + "\n")
            logger.info(f"wrote problem to {args.output}")
        payload: RandomPayload = {"seed": seed, "problem": doc, "kind": kind, "divisions": divisions}
        await self.emit(payload, RandomPayload)
        return EXIT_OK
