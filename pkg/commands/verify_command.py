import asyncio

from fileio import load_division, load_problem
from type_defs import VerifyPayload
from verification import verify_division
from .base_command import EXIT_CHECK_FAILED, EXIT_OK, BaseCommand


class VerifyCommand(BaseCommand):
    name = "verify"

    async def execute(self) -> int:
        problem = await load_problem(self.args.file)
        allocation, prices, budget = await load_division(self.args.division, problem)
        report = await asyncio.to_thread(verify_division, problem, allocation, prices, budget)
        payload: VerifyPayload = {"checks": dict(report.checks), "details": dict(report.details)}
        await self.emit(payload, VerifyPayload)
        return EXIT_OK if report.passed else EXIT_CHECK_FAILED
