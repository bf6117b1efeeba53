"""Agent roles and population parameters."""

from dataclasses import dataclass
from enum import Enum, IntEnum

import numpy as np
from pydantic import BaseModel, Field, model_validator


class Role(IntEnum):
    """Agent roles. Integer codes are what RoleAssignment stores."""

    OBEDIENT = 0
    REBEL = 1
    UNDERCOVER = 2


class Regime(str, Enum):
    """Population regime by rebel fraction."""

    MANY = "many"
    FEW = "few"
    NEITHER = "neither"


class PopulationParams(BaseModel):
    """Parameters of role sampling.

    ``planted_rebels`` / ``planted_undercover`` override the Bernoulli draws
    with an exact count placed uniformly at random.
    """

    rho: float = Field(ge=0.0, le=1.0, description="Rebel fraction parameter")
    undercover_prob: float = Field(default=0.0, ge=0.0, le=1.0)
    planted_rebels: int | None = Field(default=None, ge=0)
    planted_undercover: int | None = Field(default=None, ge=0)

    @model_validator(mode="after")
    def fractions_fit(self) -> "PopulationParams":
        """Validate that rebel and undercover probabilities fit in [0, 1]."""
        if self.rho + self.undercover_prob > 1.0 + 1e-12:
            msg = f"rho + undercover_prob must be <= 1, got {self.rho + self.undercover_prob}"
            raise ValueError(msg)
        return self


@dataclass(frozen=True, eq=False)
class RoleAssignment:
    """Per-agent roles, stored as Role integer codes."""

    roles: np.ndarray

    def __post_init__(self) -> None:
        self.roles.setflags(write=False)

    def __len__(self) -> int:
        return int(self.roles.size)

    def role(self, i: int) -> Role:
        return Role(int(self.roles[i]))

    @property
    def rebel_mask(self) -> np.ndarray:
        return self.roles == Role.REBEL

    @property
    def obedient_mask(self) -> np.ndarray:
        return self.roles == Role.OBEDIENT

    @property
    def undercover_mask(self) -> np.ndarray:
        return self.roles == Role.UNDERCOVER

    def count(self, role: Role) -> int:
        return int(np.count_nonzero(self.roles == role))
