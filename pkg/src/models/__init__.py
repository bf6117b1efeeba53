"""Pydantic models and value types for the covert quorum simulator."""

from src.models.model_acceptance import AcceptanceReport, CriterionResult
from src.models.model_analysis import (
    ArrestCounts,
    ChernoffBound,
    DifferenceEstimate,
    Estimate,
    PsiBoundCheck,
    RiskReport,
    TrialRecord,
)
from src.models.model_attack import AttackKind, AttackStrategy, BreakDemoRecord
from src.models.model_channel import CommMode, Message, Transcript
from src.models.model_config import (
    ExperimentConfig,
    PoliceSpec,
    PopulationSpec,
    ProtocolSpec,
    SweepSpec,
    TopologyKind,
    TopologySpec,
)
from src.models.model_network import DegreeStats, Network
from src.models.model_police import ArrestDecision, PoliceKind
from src.models.model_population import PopulationParams, Regime, Role, RoleAssignment
from src.models.model_protocol import (
    BaselineDecideKind,
    BaselineMessageKind,
    MedianParams,
    ProtocolKind,
    QuorumSensingParams,
    RebelOutput,
    SelfImmolationParams,
)
from src.models.model_sweep import SweepMetadata

__all__ = [
    # Network
    "DegreeStats",
    "Network",
    # Population
    "PopulationParams",
    "Regime",
    "Role",
    "RoleAssignment",
    # Channel
    "CommMode",
    "Message",
    "Transcript",
    # Protocols
    "BaselineDecideKind",
    "BaselineMessageKind",
    "MedianParams",
    "ProtocolKind",
    "QuorumSensingParams",
    "RebelOutput",
    "SelfImmolationParams",
    # Police
    "ArrestDecision",
    "PoliceKind",
    # Attacks
    "AttackKind",
    "AttackStrategy",
    "BreakDemoRecord",
    # Analysis
    "ArrestCounts",
    "ChernoffBound",
    "DifferenceEstimate",
    "Estimate",
    "PsiBoundCheck",
    "RiskReport",
    "TrialRecord",
    # Configuration
    "ExperimentConfig",
    "PoliceSpec",
    "PopulationSpec",
    "ProtocolSpec",
    "SweepSpec",
    "TopologyKind",
    "TopologySpec",
    # Acceptance
    "AcceptanceReport",
    "CriterionResult",
    # Sweeps
    "SweepMetadata",
]
