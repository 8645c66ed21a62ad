from .demand import (
    check_price_signs,
    demand_violation,
    check_demand,
    consumption_violation,
)
from .fairness import (
    envy_witness,
    check_no_envy,
    fair_share_violation,
    check_fair_share,
    blocking_coalition,
    weak_core_blocking,
    check_weak_core,
    standard_core_blocking,
    check_solidarity,
)
from .report import VerificationReport, verify_division
