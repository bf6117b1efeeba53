"""Police arrest strategies."""

from src.police.registry import PoliceRegistry
from src.police.strategies import (
    NoArrestPolice,
    NpThresholdPolice,
    Police,
    ReversePolice,
    analytic_message_risk,
    no_arrest,
    np_threshold_police,
    reverse_police,
    tally_arrests,
)

__all__ = [
    "NoArrestPolice",
    "NpThresholdPolice",
    "Police",
    "PoliceRegistry",
    "ReversePolice",
    "analytic_message_risk",
    "no_arrest",
    "np_threshold_police",
    "reverse_police",
    "tally_arrests",
]
