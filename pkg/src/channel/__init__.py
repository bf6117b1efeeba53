"""Gaussian communication channel and seeded random streams."""

from src.channel.noise import emit, emit_private_uniform, emit_public, message_values
from src.channel.streams import TrialStreams, topology_seed

__all__ = [
    "TrialStreams",
    "emit",
    "emit_private_uniform",
    "emit_public",
    "message_values",
    "topology_seed",
]
