from .baselines import (
    BaselineResult,
    fair_share,
    max_utilities,
    egalitarian,
    egalitarian_allocation,
    baseline_result,
)
