from .problem_file import (
    SweepSpec,
    default_sweep_spec,
    read_json,
    write_text,
    parse_problem,
    parse_division,
    parse_sweep,
    load_problem,
    load_division,
    load_sweep,
    problem_to_doc,
    division_to_payload,
)
from .report_writer import report_rows, rows_to_csv, rows_to_svg
