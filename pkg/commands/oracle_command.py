import asyncio

from fileio import load_problem
from numerics import format_rat
from oracle import GridSpec, grid_critical_points, match_profiles
from solver import solve_negative
from type_defs import OraclePayload
from .base_command import EXIT_CHECK_FAILED, EXIT_OK, BaseCommand


class OracleCommand(BaseCommand):
    name = "oracle"

    async def execute(self) -> int:
        problem = await load_problem(self.args.file)
        spec = GridSpec(self.args.resolution, self.args.tolerance)
        clusters, divisions = await asyncio.gather(
            asyncio.to_thread(grid_critical_points, problem, spec),
            asyncio.to_thread(solve_negative, problem),
        )
        exact = [d.profile for d in divisions]
        matched = match_profiles(clusters, exact, spec.tolerance)
        payload: OraclePayload = {
            "clusters": [list(c) for c in clusters],
            "exact": [[format_rat(x) for x in profile] for profile in exact],
            "matched": matched,
        }
        await self.emit(payload, OraclePayload)
        return EXIT_OK if matched else EXIT_CHECK_FAILED
