from .base_command import BaseCommand, EXIT_OK, EXIT_CHECK_FAILED, EXIT_ERROR
from .classify_command import ClassifyCommand
from .solve_command import SolveCommand
from .verify_command import VerifyCommand
from .sweep_command import SweepCommand, run_sweep, sweep_row
from .oracle_command import OracleCommand
from .random_command import RandomCommand
from .report_command import ReportCommand
from .output_component import OutputComponent, render_text

COMMANDS: dict[str, type[BaseCommand]] = {
    command.name: command
    for command in (
        ClassifyCommand,
        SolveCommand,
        VerifyCommand,
        SweepCommand,
        OracleCommand,
        RandomCommand,
        ReportCommand,
    )
}
