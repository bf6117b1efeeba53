"""Role sampling and regime classification.

Each agent is first undercover with probability u; otherwise it is a rebel
with probability rho, else obedient. The rebel fraction among non-undercover
agents is therefore exactly rho in expectation.
"""

import logging

import numpy as np

from src.consts import FEW_RHO_THRESHOLD, MANY_RHO_THRESHOLD
from src.errors import InvalidParameterError
from src.models.model_population import PopulationParams, Regime, Role, RoleAssignment

logger = logging.getLogger(__name__)


def _plant(pool: np.ndarray, k: int, rng: np.random.Generator, what: str) -> np.ndarray:
    if k > pool.size:
        raise InvalidParameterError(f"Cannot plant {k} {what} among {pool.size} agents")
    return rng.choice(pool, size=k, replace=False)


def sample_roles(n: int, params: PopulationParams, rng: np.random.Generator) -> RoleAssignment:
    """Draw every agent's role independently (or plant exact counts).

    Args:
        n: Agent count
        params: Rebel and undercover parameters
        rng: Dedicated role-sampling stream

    Returns:
        RoleAssignment of length n
    """
    if n < 0:
        raise InvalidParameterError(f"Agent count must be >= 0, got {n}")
    roles = np.full(n, Role.OBEDIENT, dtype=np.int8)

    if params.planted_undercover is not None:
        undercover = np.zeros(n, dtype=bool)
        undercover[_plant(np.arange(n), params.planted_undercover, rng, "undercover agents")] = True
    else:
        undercover = rng.random(n) < params.undercover_prob
    roles[undercover] = Role.UNDERCOVER

    if params.planted_rebels is not None:
        pool = np.flatnonzero(~undercover)
        roles[_plant(pool, params.planted_rebels, rng, "rebels")] = Role.REBEL
    else:
        rebel = rng.random(n) < params.rho
        roles[rebel & ~undercover] = Role.REBEL

    assignment = RoleAssignment(roles=roles)
    logger.debug(
        f"Sampled roles: {assignment.count(Role.REBEL)} rebels, "
        f"{assignment.count(Role.UNDERCOVER)} undercover of {n}"
    )
    return assignment


def regime(rho: float) -> Regime:
    """Many iff rho >= 0.8; Few iff rho <= 0.2; otherwise Neither."""
    if not 0.0 <= rho <= 1.0:
        raise InvalidParameterError(f"rho must be in [0, 1], got {rho}")
    if rho >= MANY_RHO_THRESHOLD:
        return Regime.MANY
    if rho <= FEW_RHO_THRESHOLD:
        return Regime.FEW
    return Regime.NEITHER
