"""Acceptance suite report models."""

from datetime import datetime

from pydantic import BaseModel, Field, computed_field

from src.models.common import _utc_now


class CriterionResult(BaseModel):
    """One checked claim with the values it was judged on."""

    name: str
    passed: bool
    measured: dict[str, float] = Field(default_factory=dict)
    expected: str = Field(default="", description="Human-readable pass condition")
    detail: str = ""


class AcceptanceReport(BaseModel):
    """Machine-readable pass/fail report of one suite."""

    suite: str
    seed: int
    started_at: datetime = Field(default_factory=_utc_now)
    duration_seconds: float = 0.0
    criteria: list[CriterionResult] = Field(default_factory=list)

    @computed_field  # type: ignore[prop-decorator]
    @property
    def passed(self) -> bool:
        return bool(self.criteria) and all(c.passed for c in self.criteria)

    def add(self, result: CriterionResult) -> CriterionResult:
        self.criteria.append(result)
        return result
