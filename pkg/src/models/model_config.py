"""Experiment configuration models.

Field names follow the model's symbols: rho, epsilon, q, tau, c,
undercover_prob, mode, topology.
"""

from enum import Enum
from pathlib import Path
from typing import Literal

from pydantic import BaseModel, Field, model_validator

from src.consts import (
    DEFAULT_DEGREE,
    DEFAULT_N,
    DEFAULT_SEED,
    DEFAULT_THREADS,
    DEFAULT_TRIALS,
    FEW_RHO_THRESHOLD,
    MANY_RHO_THRESHOLD,
)
from src.models.model_attack import AttackStrategy
from src.models.model_channel import CommMode
from src.models.model_police import PoliceKind
from src.models.model_population import PopulationParams, Regime
from src.models.model_protocol import BaselineDecideKind, BaselineMessageKind, ProtocolKind

SweepParameter = Literal["epsilon", "q", "tau", "c", "undercover_prob", "rho"]


class TopologyKind(str, Enum):
    COMPLETE = "complete"
    RANDOM_REGULAR = "random_regular"
    ERDOS_RENYI = "erdos_renyi"
    EDGE_LIST = "edge_list"


class TopologySpec(BaseModel):
    """Which network to simulate on."""

    kind: TopologyKind = TopologyKind.RANDOM_REGULAR
    n: int | None = Field(default=DEFAULT_N, ge=2)
    degree: int | None = Field(default=DEFAULT_DEGREE, ge=1)
    p: float | None = Field(default=None, ge=0.0, le=1.0)
    path: Path | None = None
    max_nodes: int | None = Field(default=None, ge=1, description="BFS subsample size")
    root: int | None = Field(default=None, ge=0, description="BFS root (file id)")
    seed: int | None = Field(default=None, ge=0, description="Defaults to a stream of the master seed")

    @model_validator(mode="after")
    def parameters_for_kind(self) -> "TopologySpec":
        """Validate that the chosen kind has its parameters."""
        if self.kind == TopologyKind.EDGE_LIST and self.path is None:
            raise ValueError("edge_list topology requires 'path'")
        if self.kind != TopologyKind.EDGE_LIST and self.n is None:
            raise ValueError(f"{self.kind.value} topology requires 'n'")
        if self.kind == TopologyKind.RANDOM_REGULAR and self.degree is None:
            raise ValueError("random_regular topology requires 'degree'")
        if self.kind == TopologyKind.ERDOS_RENYI and self.p is None:
            raise ValueError("erdos_renyi topology requires 'p'")
        return self


class ProtocolSpec(BaseModel):
    """Which rebel protocol to run, with its parameters."""

    kind: ProtocolKind = ProtocolKind.QUORUM_SENSING
    epsilon: float | None = Field(default=0.2, gt=0.0)
    q: float | None = Field(default=None, gt=0.0, le=1.0)
    tau: float | None = Field(default=None, gt=0.0)
    c: float | None = Field(default=None, gt=0.0)
    message: BaselineMessageKind = BaselineMessageKind.ALWAYS_ZERO
    decide: BaselineDecideKind = BaselineDecideKind.NEVER_MANY

    @model_validator(mode="after")
    def parameters_for_kind(self) -> "ProtocolSpec":
        """Validate that the chosen protocol has its parameters."""
        if self.kind in (ProtocolKind.QUORUM_SENSING, ProtocolKind.MEDIAN) and self.epsilon is None:
            raise ValueError(f"{self.kind.value} requires 'epsilon'")
        if self.kind == ProtocolKind.SELF_IMMOLATION:
            explicit = self.q is not None and self.tau is not None
            if not explicit and (self.q is not None or self.tau is not None):
                raise ValueError("self_immolation needs both 'q' and 'tau', or neither")
        return self


class PoliceSpec(BaseModel):
    """One police strategy to apply to every trial."""

    kind: PoliceKind
    epsilon: float | None = Field(
        default=None, gt=0.0, description="Threshold epsilon; defaults to the protocol's"
    )

    @property
    def label(self) -> str:
        return self.kind.value


class PopulationSpec(BaseModel):
    """Role sampling parameters for both regimes."""

    rho: float = Field(default=MANY_RHO_THRESHOLD, ge=0.0, le=1.0, description="rho of a single run")
    many_rho: float = Field(default=MANY_RHO_THRESHOLD, ge=0.0, le=1.0)
    few_rho: float = Field(default=FEW_RHO_THRESHOLD, ge=0.0, le=1.0)
    undercover_prob: float = Field(default=0.0, ge=0.0, le=1.0)
    planted_rebels: int | None = Field(default=None, ge=0)
    planted_undercover: int | None = Field(default=None, ge=0)
    attack: AttackStrategy = Field(default_factory=AttackStrategy)
    nonstandard_regime: bool = False

    @model_validator(mode="after")
    def regimes_are_standard(self) -> "PopulationSpec":
        """Validate regime rhos unless explicitly overridden."""
        if not self.nonstandard_regime:
            if self.many_rho < MANY_RHO_THRESHOLD:
                raise ValueError(f"many_rho must be >= {MANY_RHO_THRESHOLD}, got {self.many_rho}")
            if self.few_rho > FEW_RHO_THRESHOLD:
                raise ValueError(f"few_rho must be <= {FEW_RHO_THRESHOLD}, got {self.few_rho}")
        for rho in (self.rho, self.many_rho, self.few_rho):
            if rho + self.undercover_prob > 1.0 + 1e-12:
                raise ValueError(f"rho + undercover_prob must be <= 1 (rho={rho})")
        return self

    def params(self) -> PopulationParams:
        return PopulationParams(
            rho=self.rho,
            undercover_prob=self.undercover_prob,
            planted_rebels=self.planted_rebels,
            planted_undercover=self.planted_undercover,
        )


class SweepSpec(BaseModel):
    """A one-parameter grid sweep."""

    parameter: SweepParameter = "epsilon"
    grid: list[float] = Field(min_length=1)


class ExperimentConfig(BaseModel):
    """Complete description of an experiment."""

    name: str = "experiment"
    topology: TopologySpec = Field(default_factory=TopologySpec)
    mode: CommMode = CommMode.PUBLIC
    protocol: ProtocolSpec = Field(default_factory=ProtocolSpec)
    police: list[PoliceSpec] = Field(default_factory=list)
    population: PopulationSpec = Field(default_factory=PopulationSpec)
    trials: int = Field(default=DEFAULT_TRIALS, ge=1)
    seed: int = Field(default=DEFAULT_SEED, ge=0)
    sweep: SweepSpec | None = None
    output: Path | None = None
    threads: int = Field(default=DEFAULT_THREADS, ge=1)

    @classmethod
    def from_file(cls, path: Path | str) -> "ExperimentConfig":
        return cls.model_validate_json(Path(path).read_text(encoding="utf-8"))

    def at_rho(self, rho: float) -> "ExperimentConfig":
        population = self.population.model_copy(update={"rho": rho})
        return self.model_copy(update={"population": population})

    def at_regime(self, regime: Regime) -> "ExperimentConfig":
        """Copy with population.rho set to the regime's configured rho."""
        if regime == Regime.MANY:
            return self.at_rho(self.population.many_rho)
        if regime == Regime.FEW:
            return self.at_rho(self.population.few_rho)
        msg = f"No configured rho for regime {regime.value}"
        raise ValueError(msg)

    def with_parameter(self, parameter: SweepParameter, value: float) -> "ExperimentConfig":
        """Copy with one sweepable parameter replaced, re-running validation."""
        data = self.model_dump()
        if parameter in ("undercover_prob", "rho"):
            data["population"][parameter] = value
        else:
            data["protocol"][parameter] = value
        return ExperimentConfig.model_validate(data)
