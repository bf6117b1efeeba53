"""Tests for rebel protocols and the protocol registry."""

import numpy as np
import pytest

from src.channel.noise import emit_public
from src.consts import HUGE_MESSAGE
from src.errors import InvalidInputError, ParameterRangeWarning
from src.graph.degree_stats import degree_stats
from src.harness.results import ResultStore
from src.models.model_config import ProtocolSpec
from src.models.model_network import Network
from src.models.model_protocol import (
    BaselineDecideKind,
    BaselineMessageKind,
    MedianParams,
    ProtocolKind,
    QuorumSensingParams,
    RebelOutput,
    SelfImmolationParams,
)
from src.police.strategies import NpThresholdPolice
from src.protocols import baseline as baseline_module
from src.protocols.baseline import BaselineProtocol, baseline_decide, baseline_message
from src.protocols.median import MedianProtocol, median_decide, median_message
from src.protocols.quorum_sensing import QuorumSensingProtocol, qs_decide, qs_message
from src.protocols.registry import ProtocolRegistry
from src.protocols.self_immolation import SelfImmolationProtocol, si_decide, si_message

QS = QuorumSensingParams(epsilon=0.2)
MEDIAN = MedianParams(epsilon=0.1)
SI = SelfImmolationParams(q=0.1, tau=2.0)


class TestQuorumSensing:
    """Tests for Quorum-Sensing."""

    def test_message(self) -> None:
        assert qs_message(QS).value == 0.2

    def test_threshold_is_inclusive(self) -> None:
        """Test a mean of exactly eps / 2 outputs many."""
        assert qs_decide([0.1, 0.1], 2, 2, QS) == RebelOutput.MANY
        assert qs_decide([0.1, 0.0999], 2, 2, QS) == RebelOutput.SILENT

    def test_degree_gate(self) -> None:
        assert qs_decide([5.0, 5.0], 2, 3, QS) == RebelOutput.SILENT
        assert qs_decide([5.0, 5.0, 5.0], 3, 3, QS) == RebelOutput.MANY

    def test_monotone_in_signals(self) -> None:
        low = [0.0, 0.05, 0.1, 0.2]
        for shift in (0.0, 0.1, 0.5):
            before = qs_decide(low, 4, 4, QS) == RebelOutput.MANY
            after = qs_decide([s + shift for s in low], 4, 4, QS) == RebelOutput.MANY
            assert after or not before

    def test_single_huge_signal_flips(self) -> None:
        signals = [0.0] * 999 + [HUGE_MESSAGE]
        assert qs_decide(signals, 1000, 1000, QS) == RebelOutput.MANY

    def test_empty_signals(self) -> None:
        with pytest.raises(InvalidInputError):
            qs_decide([], 0, 0, QS)


class TestMedian:
    """Tests for the Median protocol."""

    def test_message_matches_quorum_sensing(self) -> None:
        assert median_message(MEDIAN) == qs_message(QuorumSensingParams(epsilon=0.1))

    def test_threshold(self) -> None:
        """Test the above-eps count must strictly exceed (1/2 - 7 eps / 30) deg."""
        # (1/2 - 7 * 0.1 / 30) * 10 = 4.77, so 5 signals above 0.1 are needed
        five = [1.0] * 5 + [0.0] * 5
        four = [1.0] * 4 + [0.0] * 6
        assert median_decide(five, 10, 10, MEDIAN) == RebelOutput.MANY
        assert median_decide(four, 10, 10, MEDIAN) == RebelOutput.SILENT

    def test_above_is_strict(self) -> None:
        at_eps = [0.1] * 10
        assert median_decide(at_eps, 10, 10, MEDIAN) == RebelOutput.SILENT

    def test_one_huge_neighbor_moves_count_by_one(self) -> None:
        four = [1.0] * 4 + [0.0] * 6
        attacked = [1.0] * 4 + [HUGE_MESSAGE] + [0.0] * 5
        assert median_decide(four, 10, 10, MEDIAN) == RebelOutput.SILENT
        assert median_decide(attacked, 10, 10, MEDIAN) == RebelOutput.MANY
        signals = [0.0] * 9 + [HUGE_MESSAGE]
        assert median_decide(signals, 10, 10, MEDIAN) == RebelOutput.SILENT

    def test_degree_gate(self) -> None:
        assert median_decide([1.0] * 10, 10, 11, MEDIAN) == RebelOutput.SILENT

    def test_warns_outside_range(self) -> None:
        with pytest.warns(ParameterRangeWarning):
            MedianParams(epsilon=0.5)

    def test_threshold_fraction(self) -> None:
        assert MedianParams(epsilon=0.1).threshold_fraction == pytest.approx(0.5 - 0.7 / 30)


class TestSelfImmolation:
    """Tests for Self-Immolation."""

    def test_huge_count_threshold(self) -> None:
        """Test the huge count must exceed tau * deg / median."""
        three = [HUGE_MESSAGE] * 3 + [0.0] * 7
        two = [HUGE_MESSAGE] * 2 + [0.0] * 8
        assert si_decide(three, 10, 10, SI) == RebelOutput.MANY
        assert si_decide(two, 10, 10, SI) == RebelOutput.SILENT

    def test_threshold_scales_with_degree(self) -> None:
        # tau * 20 / 10 = 4
        four = [HUGE_MESSAGE] * 4 + [0.0] * 16
        five = [HUGE_MESSAGE] * 5 + [0.0] * 15
        assert si_decide(four, 20, 10, SI) == RebelOutput.SILENT
        assert si_decide(five, 20, 10, SI) == RebelOutput.MANY

    def test_ordinary_signals_not_huge(self) -> None:
        assert si_decide([50.0] * 10, 10, 10, SI) == RebelOutput.SILENT

    def test_zero_median_degree(self) -> None:
        with pytest.raises(InvalidInputError):
            si_decide([0.0], 1, 0, SI)

    def test_message_draws_one_uniform(self) -> None:
        """Test si_message consumes exactly one draw from the stream."""
        a = np.random.default_rng(5)
        b = np.random.default_rng(5)
        si_message(SI, a)
        b.random()
        assert a.random() == b.random()

    def test_message_frequency(self) -> None:
        rng = np.random.default_rng(8)
        params = SelfImmolationParams(q=0.05, tau=1.0)
        huge = sum(si_message(params, rng).is_huge for _ in range(20_000))
        assert huge / 20_000 == pytest.approx(0.05, abs=0.006)

    def test_from_network(self) -> None:
        params = SelfImmolationParams.from_network(10_000, 500, c=4.0)
        assert params.q == pytest.approx(4.0 * np.log(10_000) / 500)
        assert params.tau == pytest.approx(2.0 * np.log(10_000))

    def test_from_network_clamps_q(self) -> None:
        assert SelfImmolationParams.from_network(1000, 2).q == 1.0


class TestBaseline:
    """Tests for baseline protocols."""

    def test_message_is_zero(self) -> None:
        assert baseline_message(BaselineMessageKind.ALWAYS_ZERO).value == 0.0

    def test_decisions_ignore_signals(self) -> None:
        assert baseline_decide(BaselineDecideKind.ALWAYS_MANY) == RebelOutput.MANY
        assert baseline_decide(BaselineDecideKind.NEVER_MANY) == RebelOutput.SILENT

    def test_always_many_has_no_degree_gate(self) -> None:
        protocol = BaselineProtocol(decide=BaselineDecideKind.ALWAYS_MANY)
        assert protocol.decide([0.0], 1, 100) == RebelOutput.MANY
        assert protocol.analytic_message_risk(np.ones(5)) == 0.0


class TestBatchAgreesWithScalar:
    """Tests that vectorized decisions match the per-agent rules."""

    @pytest.mark.parametrize(
        "protocol",
        [
            QuorumSensingProtocol(QuorumSensingParams(epsilon=0.5)),
            MedianProtocol(MedianParams(epsilon=0.1)),
            SelfImmolationProtocol(SelfImmolationParams(q=0.3, tau=1.0)),
        ],
        ids=["quorum_sensing", "median", "self_immolation"],
    )
    def test_agreement(self, protocol, small_network: Network) -> None:
        rng = np.random.default_rng(21)
        values = np.where(rng.random(small_network.n) < 0.5, 0.5, 0.0)
        values[rng.random(small_network.n) < 0.2] = HUGE_MESSAGE
        transcript = emit_public(values, small_network, rng)
        degrees = small_network.degrees
        batch = protocol.decide_batch(transcript.received, small_network.receiver_index, degrees, 6)
        for i in range(small_network.n):
            scalar = protocol.decide(transcript.received_signals(i), int(degrees[i]), 6)
            assert batch[i] == (scalar == RebelOutput.MANY)

    def test_agents_without_signals_are_silent(self) -> None:
        protocol = QuorumSensingProtocol(QuorumSensingParams(epsilon=0.2))
        many = protocol.decide_batch(
            np.array([1.0, 1.0]), np.array([0, 0]), np.array([2, 0]), median_degree=0
        )
        assert many.tolist() == [True, False]


class TestAnalyticMessageRisk:
    """Tests for protocol-level analytic message risk."""

    def test_public_quorum_sensing(self) -> None:
        protocol = QuorumSensingProtocol(QuorumSensingParams(epsilon=0.2))
        assert protocol.analytic_message_risk(np.ones(10)) == pytest.approx(0.0797, abs=1e-4)

    def test_private_grows_with_copies(self) -> None:
        protocol = MedianProtocol(MedianParams(epsilon=0.1))
        assert protocol.analytic_message_risk(np.full(4, 100)) > protocol.analytic_message_risk(
            np.ones(4)
        )

    def test_self_immolation_is_about_q(self) -> None:
        protocol = SelfImmolationProtocol(SelfImmolationParams(q=0.07, tau=1.0))
        assert protocol.analytic_message_risk(np.ones(10)) == pytest.approx(0.07)


class TestProtocolRegistry:
    """Tests for ProtocolRegistry."""

    def test_builds_every_kind(self, small_network: Network) -> None:
        stats = degree_stats(small_network)
        registry = ProtocolRegistry()
        for kind in ProtocolKind:
            protocol = registry.build(ProtocolSpec(kind=kind, epsilon=0.1), stats)
            assert protocol.kind == kind

    def test_self_immolation_from_network(self, small_network: Network) -> None:
        stats = degree_stats(small_network)
        protocol = ProtocolRegistry().build(
            ProtocolSpec(kind=ProtocolKind.SELF_IMMOLATION, c=0.5), stats
        )
        assert protocol.params.q == pytest.approx(0.5 * np.log(60) / 6)
        assert protocol.epsilon is None

    def test_self_immolation_explicit(self, small_network: Network) -> None:
        spec = ProtocolSpec(kind=ProtocolKind.SELF_IMMOLATION, q=0.2, tau=3.0)
        protocol = ProtocolRegistry().build(spec, degree_stats(small_network))
        assert (protocol.params.q, protocol.params.tau) == (0.2, 3.0)


class TestDecisionProperties:
    """Tests of decision-rule invariants on random signals."""

    def test_median_ignores_signal_order(self) -> None:
        rng = np.random.default_rng(5)
        for _ in range(50):
            signals = rng.normal(0.1, 1.0, size=30)
            expected = median_decide(signals, 30, 30, MEDIAN)
            assert median_decide(rng.permutation(signals), 30, 30, MEDIAN) == expected

    def test_median_batch_ignores_edge_order(self, small_network: Network) -> None:
        rng = np.random.default_rng(6)
        protocol = MedianProtocol(MEDIAN)
        owners = small_network.receiver_index
        values = rng.normal(0.1, 1.0, size=owners.size)
        order = rng.permutation(owners.size)
        degrees = small_network.degrees
        assert np.array_equal(
            protocol.decide_batch(values, owners, degrees, 6),
            protocol.decide_batch(values[order], owners[order], degrees, 6),
        )

    def test_si_depends_only_on_huge_count(self) -> None:
        rng = np.random.default_rng(7)
        for huge in range(7):
            expected = RebelOutput.MANY if huge > 2 else RebelOutput.SILENT
            for _ in range(20):
                other = rng.normal(0.0, 100.0, size=10 - huge).clip(-900.0, 900.0)
                other[rng.random(other.size) < 0.3] = -HUGE_MESSAGE
                loud = HUGE_MESSAGE + rng.normal(size=huge)
                signals = rng.permutation(np.concatenate([loud, other]))
                assert si_decide(signals, 10, 10, SI) == expected

    @pytest.mark.parametrize(
        "protocol",
        [
            QuorumSensingProtocol(QuorumSensingParams(epsilon=0.5)),
            MedianProtocol(MedianParams(epsilon=0.1)),
            SelfImmolationProtocol(SelfImmolationParams(q=0.3, tau=1.0)),
        ],
        ids=["quorum_sensing", "median", "self_immolation"],
    )
    def test_degree_gate_on_random_signals(self, protocol) -> None:
        rng = np.random.default_rng(8)
        median = 6
        degrees = rng.integers(1, 12, size=80)
        owners = np.repeat(np.arange(degrees.size), degrees)
        values = np.where(
            rng.random(owners.size) < 0.5, HUGE_MESSAGE, rng.normal(0.0, 1.0, size=owners.size)
        )
        many = protocol.decide_batch(values, owners, degrees, median)
        gated = degrees < median
        assert gated.any()
        assert not many[gated].any()
        for i in np.flatnonzero(gated):
            assert protocol.decide(values[owners == i], int(degrees[i]), median) == RebelOutput.SILENT

        loud = protocol.decide_batch(np.full(owners.size, HUGE_MESSAGE), owners, degrees, median)
        assert loud[~gated].all()


class TestDocumentation:
    """Tests that the public protocol and police surface is documented."""

    @pytest.mark.parametrize(
        "obj",
        [
            qs_message,
            baseline_message,
            baseline_decide,
            MedianProtocol,
            NpThresholdPolice,
            ResultStore.save_run,
        ],
        ids=lambda obj: obj.__qualname__,
    )
    def test_docstring(self, obj) -> None:
        assert obj.__doc__ and obj.__doc__.strip()

    def test_baseline_module_notes_degree_gate(self) -> None:
        assert "degree gate" in baseline_module.__doc__
