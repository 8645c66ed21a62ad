import asyncio

from fileio import load_problem
from numerics import format_rat
from problem import classify
from type_defs import ClassificationPayload
from .base_command import EXIT_OK, BaseCommand


class ClassifyCommand(BaseCommand):
    name = "classify"

    async def execute(self) -> int:
        problem = await load_problem(self.args.file)
        classification = await asyncio.to_thread(classify, problem)
        payload: ClassificationPayload = {
            "kind": classification.kind.value,
            "lpValue": None if classification.lp_value is None else format_rat(classification.lp_value),
        }
        await self.emit(payload, ClassificationPayload)
        return EXIT_OK
