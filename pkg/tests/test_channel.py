"""Tests for the Gaussian channel and seeded streams."""

import numpy as np
import pytest

from src.channel.noise import emit, emit_private_uniform, emit_public, message_values
from src.channel.streams import TrialStreams, topology_seed
from src.errors import InvalidInputError, InvalidParameterError
from src.graph.builders import build_complete
from src.models.model_channel import CommMode, Message
from src.models.model_network import Network


class TestMessage:
    """Tests for the message value type."""

    def test_huge_sentinel(self) -> None:
        assert Message.huge().is_huge
        assert Message.huge(sign=-1.0).value < 0
        assert Message.huge(sign=-1.0).is_huge
        assert not Message(0.2).is_huge

    def test_values_from_messages(self) -> None:
        values = message_values([Message(0.1), Message.zero(), Message.huge()])
        assert values.tolist() == [0.1, 0.0, 1e6]


class TestEmitPublic:
    """Tests for public communication."""

    def test_noiseless_transcript(self, small_network: Network, rng: np.random.Generator) -> None:
        """Test receivers and police see exact messages at zero noise."""
        values = np.arange(small_network.n, dtype=np.float64)
        transcript = emit_public(values, small_network, rng, noise_scale=0.0)

        assert transcript.mode == CommMode.PUBLIC
        assert np.array_equal(transcript.received, values[small_network.indices])
        assert np.array_equal(transcript.police_values, values)
        for i in (0, 17, 59):
            assert transcript.police_view(i).tolist() == [float(i)]
            assert transcript.received_signals(i).size == small_network.degrees[i]

    def test_received_from_pairs(self, rng: np.random.Generator) -> None:
        network = build_complete(3)
        transcript = emit_public(np.array([0.0, 1.0, 2.0]), network, rng, noise_scale=0.0)
        assert transcript.received_from(1) == [(0, 0.0), (2, 2.0)]

    def test_noise_is_standard_normal(self, rng: np.random.Generator) -> None:
        network = build_complete(200)
        transcript = emit_public(np.zeros(200), network, rng)
        noise = transcript.received
        assert abs(noise.mean()) < 0.03
        assert noise.std() == pytest.approx(1.0, abs=0.03)

    def test_police_noise_independent_of_receivers(self) -> None:
        """Test the police stream does not shift the receivers' draws."""
        network = build_complete(10)
        a = emit_public(np.zeros(10), network, np.random.default_rng(1), np.random.default_rng(2))
        b = emit_public(np.zeros(10), network, np.random.default_rng(1), np.random.default_rng(3))
        assert np.array_equal(a.received, b.received)
        assert not np.array_equal(a.police_values, b.police_values)

    def test_wrong_message_count(self, small_network: Network, rng: np.random.Generator) -> None:
        with pytest.raises(InvalidInputError):
            emit_public(np.zeros(3), small_network, rng)

    def test_noise_scale_is_fixed(self, small_network: Network, rng: np.random.Generator) -> None:
        with pytest.raises(InvalidParameterError):
            emit_public(np.zeros(small_network.n), small_network, rng, noise_scale=2.0)

    def test_transcript_is_read_only(self, small_network: Network, rng: np.random.Generator) -> None:
        transcript = emit_public(np.zeros(small_network.n), small_network, rng)
        with pytest.raises(ValueError):
            transcript.received[0] = 1.0


class TestEmitPrivate:
    """Tests for private communication."""

    def test_police_sees_one_copy_per_link(self, small_network: Network, rng: np.random.Generator) -> None:
        values = np.linspace(-1.0, 1.0, small_network.n)
        transcript = emit_private_uniform(values, small_network, rng, noise_scale=0.0)

        assert transcript.mode == CommMode.PRIVATE
        assert np.array_equal(transcript.police_indptr, small_network.indptr)
        for i in (0, 30):
            view = transcript.police_view(i)
            assert view.size == small_network.degrees[i]
            assert np.all(view == values[i])
        assert np.array_equal(transcript.police_owner, small_network.receiver_index)

    def test_police_copies_noised_independently(self, rng: np.random.Generator) -> None:
        network = build_complete(6)
        transcript = emit_private_uniform(np.zeros(6), network, rng)
        assert np.unique(transcript.police_view(0)).size == 5
        assert not np.array_equal(transcript.police_values, transcript.received)

    def test_dispatch(self, small_network: Network) -> None:
        values = np.zeros(small_network.n)
        public = emit(CommMode.PUBLIC, values, small_network, np.random.default_rng(0))
        private = emit(CommMode.PRIVATE, values, small_network, np.random.default_rng(0))
        assert public.police_values.size == small_network.n
        assert private.police_values.size == small_network.indices.size
        assert np.array_equal(public.received, private.received)


class TestStreams:
    """Tests for per-trial random streams."""

    def test_same_trial_same_draws(self) -> None:
        a = TrialStreams.derive(42, 3)
        b = TrialStreams.derive(42, 3)
        assert a.roles.random() == b.roles.random()
        assert a.police_noise.standard_normal() == b.police_noise.standard_normal()

    def test_streams_are_independent(self) -> None:
        streams = TrialStreams.derive(42, 0)
        draws = {
            streams.roles.random(),
            streams.receiver_noise.random(),
            streams.police_noise.random(),
            streams.protocol.random(),
        }
        assert len(draws) == 4

    def test_trials_differ(self) -> None:
        assert TrialStreams.derive(42, 0).roles.random() != TrialStreams.derive(42, 1).roles.random()

    def test_trial_streams_uncorrelated(self) -> None:
        """Test draws of neighboring trials and of sibling streams show no correlation."""
        size = 20_000
        bound = 4 / np.sqrt(size)
        first = TrialStreams.derive(42, 0)
        second = TrialStreams.derive(42, 1)
        pairs = [
            (first.receiver_noise.standard_normal(size), second.receiver_noise.standard_normal(size)),
            (first.police_noise.standard_normal(size), second.police_noise.standard_normal(size)),
            (first.roles.standard_normal(size), first.protocol.standard_normal(size)),
        ]
        for a, b in pairs:
            assert abs(np.corrcoef(a, b)[0, 1]) < bound

    def test_topology_seed_is_separate(self) -> None:
        graph = np.random.default_rng(topology_seed(42)).random()
        assert graph == np.random.default_rng(topology_seed(42)).random()
        assert graph != TrialStreams.derive(42, 0).roles.random()
