"""Estimator, trial and risk-report models."""

from enum import Enum

from pydantic import BaseModel, Field, computed_field

from src.consts import SUCCESS_FRACTION
from src.models.model_population import Regime


class Estimate(BaseModel):
    """A binomial proportion with its confidence interval."""

    value: float = Field(ge=0.0, le=1.0)
    lo: float = Field(ge=0.0, le=1.0)
    hi: float = Field(ge=0.0, le=1.0)
    successes: int = Field(ge=0)
    trials: int = Field(ge=0)
    std_error: float = Field(ge=0.0)


class DifferenceEstimate(BaseModel):
    """Difference of two proportions (rebel minus obedient arrest rate)."""

    value: float = Field(ge=-1.0, le=1.0)
    lo: float = Field(ge=-1.0, le=1.0)
    hi: float = Field(ge=-1.0, le=1.0)
    std_error: float = Field(ge=0.0)
    rebel_rate: Estimate
    obedient_rate: Estimate


class ArrestCounts(BaseModel):
    """Arrest tallies of one police strategy in one trial. Undercover agents are excluded."""

    rebels: int = Field(default=0, ge=0)
    rebel_arrests: int = Field(default=0, ge=0)
    obedient: int = Field(default=0, ge=0)
    obedient_arrests: int = Field(default=0, ge=0)


class TrialRecord(BaseModel):
    """Sufficient statistics of one simulated round.

    Counts replace per-agent arrays: every estimator is a sum over them, so
    aggregation is order-independent.
    """

    trial_index: int = Field(ge=0)
    rho: float = Field(ge=0.0, le=1.0)
    regime: Regime
    rebel_count: int = Field(ge=0)
    many_count: int = Field(ge=0)
    eligible_rebel_count: int = Field(ge=0, description="Rebels with degree >= median")
    eligible_many_count: int = Field(ge=0)
    undercover_count: int = Field(default=0, ge=0)
    huge_emitters: int = Field(default=0, ge=0, description="Rebels that sent the huge sentinel")
    arrests: dict[str, ArrestCounts] = Field(default_factory=dict)

    @computed_field  # type: ignore[prop-decorator]
    @property
    def fraction_many(self) -> float:
        """Fraction of rebels that output many (0 when there are no rebels)."""
        return self.many_count / self.rebel_count if self.rebel_count else 0.0

    @property
    def succeeded(self) -> bool:
        return self.rebel_count > 0 and self.fraction_many >= SUCCESS_FRACTION


class RiskReport(BaseModel):
    """Success and risk figures of one protocol configuration.

    ``total_risk`` is output_risk + message_risk_analytic; it is None when no
    few-regime trials were run.
    """

    trials: int = Field(ge=0)
    success: Estimate | None = None
    output_risk: Estimate | None = None
    output_risk_unrestricted: Estimate | None = None
    message_risk_analytic: float = Field(ge=0.0, le=1.0)
    message_risk_empirical: dict[Regime, dict[str, DifferenceEstimate]] = Field(
        default_factory=dict, description="Per regime, per police label"
    )
    regime_many_rho: float | None = None
    regime_few_rho: float | None = None

    @computed_field  # type: ignore[prop-decorator]
    @property
    def total_risk(self) -> float | None:
        if self.output_risk is None:
            return None
        return self.output_risk.value + self.message_risk_analytic


class ChernoffBound(str, Enum):
    """Closed-form tail bounds from the protocol analyses."""

    QS_OUTPUT_RISK = "qs_output_risk"
    MEDIAN_FEW = "median_few"
    MEDIAN_MANY = "median_many"
    SI_OUTPUT_RISK = "si_output_risk"


class PsiBoundCheck(BaseModel):
    """Result of checking the Gaussian tail sandwich at one epsilon."""

    epsilon: float
    psi: float
    approx_lower: float = Field(description="Polya approximation minus 1/500")
    approx_upper: float = Field(description="Polya approximation plus 1/500")
    linear_lower: float = Field(description="(1 - 2 eps) / 2")
    linear_upper: float = Field(description="(1 - 2 eps / 3) / 2")
    lower_ok: bool
    upper_ok: bool
    in_range: bool
