"""Statistical primitives, exact oracles and risk estimators."""

from src.analysis.bounds import (
    chernoff_reference,
    median_total_risk_bound,
    polya_tail,
    psi_bound_check,
    qs_total_risk_bound,
)
from src.analysis.estimators import (
    build_risk_report,
    estimate_many_rate,
    estimate_message_risk,
    estimate_output_risk,
    estimate_success,
    pooled_arrests,
)
from src.analysis.gaussian import (
    kl_gauss,
    kl_gauss_numerical,
    normal_cdf,
    normal_tail,
    pinsker_bound,
    tv_gauss,
    tv_gauss_numerical,
)
from src.analysis.intervals import (
    clustered_wilson_interval,
    design_effect,
    newcombe_difference,
    wilson_interval,
)
from src.analysis.oracles import (
    binomial_exceeds,
    high_signal_probability,
    median_many_probability,
    qs_many_probability,
    qs_many_probability_gaussian,
    si_many_probability,
)

__all__ = [
    # Gaussian primitives
    "kl_gauss",
    "kl_gauss_numerical",
    "normal_cdf",
    "normal_tail",
    "pinsker_bound",
    "tv_gauss",
    "tv_gauss_numerical",
    # Bounds
    "chernoff_reference",
    "median_total_risk_bound",
    "polya_tail",
    "psi_bound_check",
    "qs_total_risk_bound",
    # Intervals
    "clustered_wilson_interval",
    "design_effect",
    "newcombe_difference",
    "wilson_interval",
    # Oracles
    "binomial_exceeds",
    "high_signal_probability",
    "median_many_probability",
    "qs_many_probability",
    "qs_many_probability_gaussian",
    "si_many_probability",
    # Estimators
    "build_risk_report",
    "estimate_many_rate",
    "estimate_message_risk",
    "estimate_output_risk",
    "estimate_success",
    "pooled_arrests",
]
