import asyncio
import logging

from fileio import load_problem, report_rows, rows_to_csv, rows_to_svg, write_text
from type_defs import ReportPayload
from .base_command import EXIT_OK, BaseCommand

logger = logging.getLogger(__name__)


class ReportCommand(BaseCommand):
    name = "report"

    async def execute(self) -> int:
        problem = await load_problem(self.args.file)
        rows = await asyncio.to_thread(report_rows, problem)
        match self.args.format:
            case "svg":
                content = await asyncio.to_thread(rows_to_svg, rows, self.args.file)
            case _:
                content = rows_to_csv(rows)
        if self.args.output:
            await write_text(self.args.output, content)
            logger.info(f"wrote {self.args.format} report to {self.args.output}")
        payload: ReportPayload = {
            "format": self.args.format,
            "rows": rows,
            "content": content,
            "output": self.args.output,
        }
        await self.emit(payload, ReportPayload)
        return EXIT_OK
