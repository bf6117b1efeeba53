"""Seeded random streams.

One master seed drives everything. Each trial gets its own SeedSequence keyed
by (seed, trial_index); within a trial, independent child streams serve role
sampling, receiver noise, police noise and protocol coins, so adding a police
observer never shifts the draws the receivers see.
"""

from dataclasses import dataclass

import numpy as np

# Spawn keys of length 2 never collide with per-trial keys of length 1
_TOPOLOGY_KEY = (0xFFFF_FFFF, 0)


@dataclass(frozen=True)
class TrialStreams:
    """Independent generators of one trial."""

    roles: np.random.Generator
    receiver_noise: np.random.Generator
    police_noise: np.random.Generator
    protocol: np.random.Generator

    @classmethod
    def derive(cls, seed: int, trial_index: int) -> "TrialStreams":
        root = np.random.SeedSequence(entropy=seed, spawn_key=(trial_index,))
        roles, receiver, police, protocol = (np.random.default_rng(s) for s in root.spawn(4))
        return cls(roles=roles, receiver_noise=receiver, police_noise=police, protocol=protocol)


def topology_seed(seed: int) -> np.random.SeedSequence:
    """Seed of network construction, independent of every trial stream."""
    return np.random.SeedSequence(entropy=seed, spawn_key=_TOPOLOGY_KEY)
