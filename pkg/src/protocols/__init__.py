"""Rebel messaging and decision rules."""

from src.protocols.base import DecisionRule, RebelProtocol
from src.protocols.baseline import BaselineProtocol, baseline_decide, baseline_message
from src.protocols.median import MedianProtocol, median_decide, median_message
from src.protocols.quorum_sensing import QuorumSensingProtocol, qs_decide, qs_message
from src.protocols.registry import ProtocolRegistry
from src.protocols.self_immolation import SelfImmolationProtocol, si_decide, si_message

__all__ = [
    "BaselineProtocol",
    "DecisionRule",
    "MedianProtocol",
    "ProtocolRegistry",
    "QuorumSensingProtocol",
    "RebelProtocol",
    "SelfImmolationProtocol",
    "baseline_decide",
    "baseline_message",
    "median_decide",
    "median_message",
    "qs_decide",
    "qs_message",
    "si_decide",
    "si_message",
]
