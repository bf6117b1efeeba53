"""Undercover messaging strategies and the single-agent break demonstration."""

import logging

import numpy as np

from src.analysis.estimators import estimate_output_risk
from src.analysis.oracles import high_signal_probability, median_many_probability
from src.channel.noise import emit_public
from src.channel.streams import TrialStreams
from src.consts import DEFAULT_SEED
from src.errors import InvalidParameterError
from src.graph.builders import build_complete
from src.graph.degree_stats import lower_median
from src.models.model_analysis import TrialRecord
from src.models.model_attack import AttackKind, AttackStrategy, BreakDemoRecord
from src.models.model_channel import Message
from src.models.model_network import Network
from src.models.model_population import PopulationParams, Role, RoleAssignment
from src.models.model_protocol import MedianParams, QuorumSensingParams
from src.population.roles import regime, sample_roles
from src.protocols.median import MedianProtocol
from src.protocols.quorum_sensing import QuorumSensingProtocol

logger = logging.getLogger(__name__)


def undercover_message(strategy: AttackStrategy) -> Message:
    """The fixed message every undercover agent sends under a strategy."""
    match strategy.kind:
        case AttackKind.HUGE_POSITIVE:
            return Message.huge()
        case AttackKind.HUGE_NEGATIVE:
            return Message.huge(sign=-1.0)
        case AttackKind.MIMIC_REBEL:
            return Message(strategy.epsilon)
        case _:
            return Message(strategy.value)


def compose_messages(
    roles: RoleAssignment, rebel_values: np.ndarray, strategy: AttackStrategy
) -> np.ndarray:
    """Per-agent message values.

    Rebels send ``rebel_values`` in agent order and undercover agents send the
    attack message. Everyone else sends 0.
    """
    values = np.zeros(len(roles))
    values[roles.rebel_mask] = rebel_values
    values[roles.undercover_mask] = undercover_message(strategy).value
    return values


def _record(
    index: int, rho: float, roles: RoleAssignment, many: np.ndarray, eligible: np.ndarray
) -> TrialRecord:
    rebels = roles.rebel_mask
    return TrialRecord(
        trial_index=index,
        rho=rho,
        regime=regime(rho),
        rebel_count=int(rebels.sum()),
        many_count=int((many & rebels).sum()),
        eligible_rebel_count=int((rebels & eligible).sum()),
        eligible_many_count=int((many & rebels & eligible).sum()),
        undercover_count=roles.count(Role.UNDERCOVER),
    )


def qs_break_demo(
    n: int = 1000,
    epsilon: float = 0.2,
    rho: float = 0.2,
    trials: int = 1000,
    seed: int = DEFAULT_SEED,
    undercover_count: int = 1,
    strategy: AttackStrategy | None = None,
    network: Network | None = None,
) -> BreakDemoRecord:
    """Run Quorum-Sensing and Median side by side against planted undercover agents.

    Both protocols emit eps, so one transcript per trial serves both deciders.

    Args:
        n: Agents on the complete graph (ignored when ``network`` is given)
        epsilon: Protocol epsilon
        rho: Rebel probability, at most 0.2
        trials: Number of rounds
        seed: Master seed
        undercover_count: Planted undercover agents
        strategy: Undercover strategy, default huge positive
        network: Complete network to reuse

    Returns:
        BreakDemoRecord with both output risks and the Median binomial oracles
    """
    if undercover_count < 0:
        raise InvalidParameterError(f"undercover_count must be >= 0, got {undercover_count}")
    strategy = strategy or AttackStrategy(kind=AttackKind.HUGE_POSITIVE)
    network = network if network is not None else build_complete(n)
    degrees = network.degrees
    median = lower_median(degrees)
    eligible = degrees >= median

    qs = QuorumSensingProtocol(QuorumSensingParams(epsilon=epsilon))
    med = MedianProtocol(MedianParams(epsilon=epsilon))
    params = PopulationParams(rho=rho, planted_undercover=undercover_count)

    qs_records: list[TrialRecord] = []
    median_records: list[TrialRecord] = []
    for t in range(trials):
        streams = TrialStreams.derive(seed, t)
        roles = sample_roles(network.n, params, streams.roles)
        values = compose_messages(roles, qs.messages(roles.count(Role.REBEL), streams.protocol), strategy)
        transcript = emit_public(values, network, streams.receiver_noise, streams.police_noise)
        owners = network.receiver_index
        qs_many = qs.decide_batch(transcript.received, owners, degrees, median)
        median_many = med.decide_batch(transcript.received, owners, degrees, median)
        qs_records.append(_record(t, rho, roles, qs_many, eligible))
        median_records.append(_record(t, rho, roles, median_many, eligible))

    p_high = high_signal_probability(epsilon, rho)
    degree = int(median)
    record = BreakDemoRecord(
        n=network.n,
        epsilon=epsilon,
        rho=rho,
        undercover_count=undercover_count,
        trials=trials,
        qs_output_risk=estimate_output_risk(qs_records),
        median_output_risk=estimate_output_risk(median_records),
        median_oracle_clean=median_many_probability(epsilon, degree, p_high),
        median_oracle_attacked=median_many_probability(
            epsilon, degree, p_high, forced_high=min(undercover_count, degree)
        ),
        corrupted=undercover_count > 0,
    )
    logger.info(
        f"Break demo: QS risk {record.qs_output_risk.value:.4f}, "
        f"Median risk {record.median_output_risk.value:.4f} "
        f"(oracle {record.median_oracle_clean:.4f} -> {record.median_oracle_attacked:.4f})"
    )
    return record
