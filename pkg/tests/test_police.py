"""Tests for police strategies and the police registry."""

import numpy as np
import pytest

from src.channel.noise import emit_private_uniform, emit_public
from src.errors import InvalidConfigurationError, InvalidInputError, InvalidParameterError
from src.graph.builders import build_complete
from src.models.model_config import PoliceSpec
from src.models.model_network import Network
from src.models.model_police import PoliceKind
from src.models.model_population import Role, RoleAssignment
from src.models.model_protocol import (
    BaselineDecideKind,
    MedianParams,
    ProtocolKind,
    QuorumSensingParams,
)
from src.police.registry import PoliceRegistry
from src.police.strategies import (
    NoArrestPolice,
    NpThresholdPolice,
    ReversePolice,
    analytic_message_risk,
    no_arrest,
    np_threshold_police,
    reverse_police,
    tally_arrests,
)
from src.protocols.baseline import BaselineProtocol
from src.protocols.median import MedianProtocol
from src.protocols.quorum_sensing import QuorumSensingProtocol

QS = QuorumSensingProtocol(QuorumSensingParams(epsilon=0.2))


class TestReversePolice:
    """Tests for the reverse police."""

    def test_arrests_when_rule_outputs_many(self) -> None:
        assert reverse_police([0.5], 3, 3, QS)
        assert not reverse_police([-1.0], 3, 3, QS)

    def test_degree_gate_uses_deg_u(self) -> None:
        """Test the gate uses the agent's degree, not the view length."""
        assert not reverse_police([0.5], 2, 3, QS)

    def test_rejects_foreign_decider(self) -> None:
        with pytest.raises(InvalidConfigurationError):
            reverse_police([0.5], 3, 3, QS, protocol=ProtocolKind.MEDIAN)

    def test_rejects_non_rule(self) -> None:
        with pytest.raises(InvalidConfigurationError):
            reverse_police([0.5], 3, 3, object())

    def test_batch_matches_scalar(self, small_network: Network) -> None:
        rng = np.random.default_rng(4)
        values = np.where(rng.random(small_network.n) < 0.5, 0.2, 0.0)
        transcript = emit_private_uniform(values, small_network, rng)
        degrees = small_network.degrees
        police = ReversePolice(QS)
        batch = police.arrest_batch(transcript, degrees, 6)
        for u in range(small_network.n):
            assert batch[u] == bool(reverse_police(transcript.police_view(u), int(degrees[u]), 6, QS))


class TestThresholdPolice:
    """Tests for the likelihood-ratio threshold police."""

    def test_far_below_threshold(self) -> None:
        assert not np_threshold_police([-1.0], 0.2)

    def test_threshold_is_inclusive(self) -> None:
        assert np_threshold_police([0.1], 0.2)
        assert np_threshold_police([0.0, 0.2], 0.2)

    def test_empty_view(self) -> None:
        with pytest.raises(InvalidInputError):
            np_threshold_police([], 0.2)

    def test_nonpositive_epsilon(self) -> None:
        with pytest.raises(InvalidParameterError):
            np_threshold_police([0.1], 0.0)
        with pytest.raises(InvalidParameterError):
            NpThresholdPolice(-0.1)

    def test_noiseless_batch(self, small_network: Network) -> None:
        values = np.zeros(small_network.n)
        values[::3] = 0.2
        transcript = emit_public(values, small_network, np.random.default_rng(0), noise_scale=0.0)
        arrested = NpThresholdPolice(0.2).arrest_batch(transcript, small_network.degrees, 6)
        assert np.array_equal(arrested, values > 0)

    def test_public_arrest_rates(self) -> None:
        """Test rebel minus obedient arrest rate is close to 2 Phi(0.1) - 1."""
        network = build_complete(400)
        values = np.zeros(400)
        values[:200] = 0.2
        police = NpThresholdPolice(0.2)
        rebel = obedient = 0
        for seed in range(50):
            transcript = emit_public(values, network, np.random.default_rng(seed))
            arrested = police.arrest_batch(transcript, network.degrees, 399)
            rebel += int(arrested[:200].sum())
            obedient += int(arrested[200:].sum())
        assert rebel / 10_000 == pytest.approx(0.5398, abs=0.02)
        assert obedient / 10_000 == pytest.approx(0.4602, abs=0.02)


class TestNoArrest:
    def test_never_arrests(self, small_network: Network) -> None:
        transcript = emit_public(np.ones(small_network.n), small_network, np.random.default_rng(0))
        assert not no_arrest()
        assert not NoArrestPolice().arrest_batch(transcript, small_network.degrees, 6).any()


class TestAnalyticMessageRisk:
    """Tests for the optimal message risk."""

    def test_public(self) -> None:
        risk = analytic_message_risk(0.2, 1)
        assert risk == pytest.approx(0.0797, abs=1e-4)
        assert risk <= 0.2 / np.sqrt(2)

    def test_private(self) -> None:
        assert analytic_message_risk(0.2, 400) == pytest.approx(0.9545, abs=1e-4)
        assert analytic_message_risk(0.1, 10_000) == pytest.approx(0.99999943, abs=1e-8)

    def test_below_pinsker_on_grid(self) -> None:
        for eps in np.arange(1, 101) * 0.01:
            assert analytic_message_risk(eps, 1) <= eps / np.sqrt(2)

    def test_invalid(self) -> None:
        with pytest.raises(InvalidParameterError):
            analytic_message_risk(0.2, 0)


class TestTallyArrests:
    def test_undercover_excluded(self) -> None:
        roles = RoleAssignment(
            roles=np.array([Role.REBEL, Role.REBEL, Role.OBEDIENT, Role.UNDERCOVER], dtype=np.int8)
        )
        counts = tally_arrests(np.array([True, False, True, True]), roles)
        assert (counts.rebels, counts.rebel_arrests) == (2, 1)
        assert (counts.obedient, counts.obedient_arrests) == (1, 1)


class TestPoliceRegistry:
    """Tests for PoliceRegistry."""

    def test_build_each_kind(self) -> None:
        registry = PoliceRegistry()
        assert isinstance(registry.build(PoliceSpec(kind=PoliceKind.REVERSE), QS), ReversePolice)
        assert isinstance(registry.build(PoliceSpec(kind=PoliceKind.NO_ARREST), QS), NoArrestPolice)
        threshold = registry.build(PoliceSpec(kind=PoliceKind.NP_THRESHOLD), QS)
        assert threshold.epsilon == 0.2

    def test_threshold_epsilon_override(self) -> None:
        median = MedianProtocol(MedianParams(epsilon=0.1))
        police = PoliceRegistry().build(PoliceSpec(kind=PoliceKind.NP_THRESHOLD, epsilon=0.3), median)
        assert police.epsilon == 0.3

    def test_threshold_needs_epsilon(self) -> None:
        baseline = BaselineProtocol(decide=BaselineDecideKind.ALWAYS_MANY)
        with pytest.raises(InvalidConfigurationError):
            PoliceRegistry().build(PoliceSpec(kind=PoliceKind.NP_THRESHOLD), baseline)

    def test_duplicate_labels(self) -> None:
        specs = [PoliceSpec(kind=PoliceKind.REVERSE), PoliceSpec(kind=PoliceKind.REVERSE)]
        with pytest.raises(InvalidConfigurationError):
            PoliceRegistry().build_all(specs, QS)
