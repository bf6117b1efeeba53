"""One simulated communication round."""

import logging
from dataclasses import dataclass

import numpy as np

from src.attacks.undercover import compose_messages
from src.channel.noise import emit
from src.channel.streams import TrialStreams
from src.consts import HUGE_SIGNAL_THRESHOLD
from src.graph.degree_stats import degree_stats
from src.harness.network import build_network
from src.models.model_analysis import TrialRecord
from src.models.model_channel import CommMode
from src.models.model_config import ExperimentConfig
from src.models.model_network import DegreeStats, Network
from src.models.model_population import Regime, Role
from src.police.registry import PoliceRegistry
from src.police.strategies import Police, tally_arrests
from src.population.roles import regime as regime_of
from src.population.roles import sample_roles
from src.protocols.base import RebelProtocol
from src.protocols.registry import ProtocolRegistry

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class TrialContext:
    """Everything a round needs that does not change between trials.

    Immutable and shared by worker threads; each trial draws only from its
    own streams.
    """

    config: ExperimentConfig
    network: Network
    stats: DegreeStats
    protocol: RebelProtocol
    polices: tuple[Police, ...]
    regime: Regime

    @classmethod
    def prepare(
        cls, config: ExperimentConfig, network: Network | None = None, regime: Regime | None = None
    ) -> "TrialContext":
        """Build the network (unless given), protocol and polices of a config.

        Args:
            config: Experiment configuration
            network: Prebuilt network to reuse
            regime: Regime label for the records; derived from population.rho when omitted
        """
        network = network if network is not None else build_network(config.topology, config.seed)
        stats = degree_stats(network)
        protocol = ProtocolRegistry().build(config.protocol, stats)
        polices = tuple(PoliceRegistry().build_all(config.police, protocol))
        return cls(
            config=config,
            network=network,
            stats=stats,
            protocol=protocol,
            polices=polices,
            regime=regime if regime is not None else regime_of(config.population.rho),
        )

    @property
    def police_labels(self) -> list[str]:
        return [p.label for p in self.polices]

    def analytic_message_risk(self) -> float:
        """Optimal message risk of the protocol, averaged over agents' copy counts."""
        if self.config.mode == CommMode.PUBLIC:
            copies = np.ones(self.network.n)
        else:
            copies = self.network.degrees
        return self.protocol.analytic_message_risk(copies)

    def run(self, trial_index: int) -> TrialRecord:
        """Sample roles, exchange messages, apply every police and every rebel decision."""
        population = self.config.population
        streams = TrialStreams.derive(self.config.seed, trial_index)
        network = self.network
        degrees = network.degrees
        median = self.stats.median_degree

        roles = sample_roles(network.n, population.params(), streams.roles)
        rebel_values = self.protocol.messages(roles.count(Role.REBEL), streams.protocol)
        values = compose_messages(roles, rebel_values, population.attack)
        transcript = emit(self.config.mode, values, network, streams.receiver_noise, streams.police_noise)

        many = self.protocol.decide_batch(transcript.received, network.receiver_index, degrees, median)
        rebels = roles.rebel_mask
        eligible = rebels & (degrees >= median)
        arrests = {
            police.label: tally_arrests(police.arrest_batch(transcript, degrees, median), roles)
            for police in self.polices
        }

        record = TrialRecord(
            trial_index=trial_index,
            rho=population.rho,
            regime=self.regime,
            rebel_count=int(rebels.sum()),
            many_count=int((many & rebels).sum()),
            eligible_rebel_count=int(eligible.sum()),
            eligible_many_count=int((many & eligible).sum()),
            undercover_count=roles.count(Role.UNDERCOVER),
            huge_emitters=int(np.count_nonzero(np.abs(rebel_values) >= HUGE_SIGNAL_THRESHOLD)),
            arrests=arrests,
        )
        logger.debug(
            f"Trial {trial_index}: {record.many_count}/{record.rebel_count} rebels many "
            f"({record.fraction_many:.3f})"
        )
        return record


def run_trial(config: ExperimentConfig, trial_index: int, network: Network | None = None) -> TrialRecord:
    """Run one round; identical (seed, trial_index) always gives an identical record."""
    return TrialContext.prepare(config, network).run(trial_index)
