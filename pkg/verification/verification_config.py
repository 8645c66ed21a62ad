from typing import get_args

from type_defs import CheckName

MAX_COALITION_AGENTS = 12  # 2^n coalition LPs beyond this

CHECK_NAMES: tuple[CheckName, ...] = get_args(CheckName)
