"""Undercover attack strategies and demonstration records."""

from enum import Enum

from pydantic import BaseModel, Field, model_validator

from src.models.model_analysis import Estimate


class AttackKind(str, Enum):
    """Static messaging strategies of undercover agents."""

    CONSTANT_VALUE = "constant_value"
    HUGE_POSITIVE = "huge_positive"
    HUGE_NEGATIVE = "huge_negative"
    MIMIC_REBEL = "mimic_rebel"


class AttackStrategy(BaseModel):
    """An undercover messaging rule. Applies only to agents with role Undercover."""

    kind: AttackKind = AttackKind.HUGE_POSITIVE
    value: float | None = Field(default=None, description="Message for constant_value")
    epsilon: float | None = Field(default=None, gt=0.0, description="Rebel epsilon to mimic")

    @model_validator(mode="after")
    def required_fields_present(self) -> "AttackStrategy":
        """Validate that the strategy carries the field its kind needs."""
        if self.kind == AttackKind.CONSTANT_VALUE and self.value is None:
            raise ValueError("constant_value attack requires 'value'")
        if self.kind == AttackKind.MIMIC_REBEL and self.epsilon is None:
            raise ValueError("mimic_rebel attack requires 'epsilon'")
        return self


class BreakDemoRecord(BaseModel):
    """Outcome of pitting Quorum-Sensing and Median against planted undercover agents."""

    n: int
    epsilon: float
    rho: float
    undercover_count: int
    trials: int
    qs_output_risk: Estimate
    median_output_risk: Estimate
    median_oracle_clean: float = Field(description="Median Many probability without attack")
    median_oracle_attacked: float = Field(
        description="Median Many probability with every undercover neighbor counted high"
    )
    corrupted: bool = Field(description="Whether any undercover agent took part")
