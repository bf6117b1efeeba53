"""Sweep output metadata."""

from datetime import datetime

from pydantic import BaseModel, Field

from src.models.common import _utc_now
from src.models.model_config import ExperimentConfig
from src.models.model_network import DegreeStats

DEFAULTS_NOTE = (
    "Sweep grid and trial counts are this tool's defaults or the user's choice; "
    "no published granularity is reproduced."
)


class SweepMetadata(BaseModel):
    """Sidecar of a sweep CSV: everything needed to rerun it."""

    name: str
    parameter: str
    grid: list[float]
    seed: int
    trials: int
    network: DegreeStats
    network_name: str = ""
    config: ExperimentConfig
    created_at: datetime = Field(default_factory=_utc_now)
    duration_seconds: float = 0.0
    defaults_note: str = DEFAULTS_NOTE
