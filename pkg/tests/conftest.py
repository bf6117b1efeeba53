"""Pytest configuration and fixtures."""

from pathlib import Path

import numpy as np
import pytest

from src.graph.builders import build_complete, build_random_regular
from src.models.model_analysis import ArrestCounts, TrialRecord
from src.models.model_channel import CommMode
from src.models.model_config import (
    ExperimentConfig,
    PoliceSpec,
    PopulationSpec,
    ProtocolSpec,
    TopologyKind,
    TopologySpec,
)
from src.models.model_network import Network
from src.models.model_police import PoliceKind
from src.models.model_population import Regime
from src.models.model_protocol import ProtocolKind


@pytest.fixture
def small_network() -> Network:
    """Random 6-regular network on 60 agents."""
    return build_random_regular(60, 6, seed=7)


@pytest.fixture
def complete_network() -> Network:
    """Complete network on 30 agents."""
    return build_complete(30)


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(12345)


@pytest.fixture
def small_config() -> ExperimentConfig:
    """Fast Quorum-Sensing config with both police strategies."""
    return ExperimentConfig(
        name="small",
        topology=TopologySpec(kind=TopologyKind.RANDOM_REGULAR, n=60, degree=6),
        mode=CommMode.PUBLIC,
        protocol=ProtocolSpec(kind=ProtocolKind.QUORUM_SENSING, epsilon=0.5),
        police=[PoliceSpec(kind=PoliceKind.NP_THRESHOLD), PoliceSpec(kind=PoliceKind.REVERSE)],
        population=PopulationSpec(),
        trials=12,
        seed=42,
    )


@pytest.fixture
def edge_list_file(tmp_path: Path) -> Path:
    """Small edge list with comments, a duplicate, a reversed edge and an isolated node."""
    path = tmp_path / "tiny.txt"
    path.write_text(
        "# tiny social graph\n"
        "10 20\n"
        "20 30\n"
        "\n"
        "30 10\n"
        "20 10\n"
        "10 20\n"
        "30 40\n"
        "99\n",
        encoding="utf-8",
    )
    return path


def make_record(
    index: int,
    regime: Regime,
    rebels: int,
    many: int,
    arrests: dict[str, ArrestCounts] | None = None,
) -> TrialRecord:
    """Trial record whose rebels are all above the median degree."""
    return TrialRecord(
        trial_index=index,
        rho=0.8 if regime == Regime.MANY else 0.2,
        regime=regime,
        rebel_count=rebels,
        many_count=many,
        eligible_rebel_count=rebels,
        eligible_many_count=many,
        arrests=arrests or {},
    )
