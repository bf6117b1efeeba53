"""Protocol registry: builds rebel protocols from configuration."""

import logging

from src.consts import SELF_IMMOLATION_DEFAULT_C
from src.models.model_config import ProtocolSpec
from src.models.model_network import DegreeStats
from src.models.model_protocol import (
    MedianParams,
    ProtocolKind,
    QuorumSensingParams,
    SelfImmolationParams,
)
from src.protocols.base import RebelProtocol
from src.protocols.baseline import BaselineProtocol
from src.protocols.median import MedianProtocol
from src.protocols.quorum_sensing import QuorumSensingProtocol
from src.protocols.self_immolation import SelfImmolationProtocol

logger = logging.getLogger(__name__)


class ProtocolRegistry:
    """Maps protocol kinds to builders.

    Self-Immolation parameters may depend on the network (q = c ln n / median,
    tau = c ln n / 2), so every build receives the network's degree statistics.
    """

    def __init__(self) -> None:
        self.builders = {
            ProtocolKind.QUORUM_SENSING: self._quorum_sensing,
            ProtocolKind.MEDIAN: self._median,
            ProtocolKind.SELF_IMMOLATION: self._self_immolation,
            ProtocolKind.BASELINE: self._baseline,
        }

    def build(self, spec: ProtocolSpec, stats: DegreeStats) -> RebelProtocol:
        """Build the protocol a spec describes.

        Args:
            spec: Protocol kind and parameters
            stats: Degree statistics of the network it will run on

        Returns:
            A ready protocol instance
        """
        protocol = self.builders[spec.kind](spec, stats)
        logger.debug(f"Built {spec.kind.value} protocol")
        return protocol

    @staticmethod
    def _quorum_sensing(spec: ProtocolSpec, stats: DegreeStats) -> RebelProtocol:
        return QuorumSensingProtocol(QuorumSensingParams(epsilon=spec.epsilon))

    @staticmethod
    def _median(spec: ProtocolSpec, stats: DegreeStats) -> RebelProtocol:
        return MedianProtocol(MedianParams(epsilon=spec.epsilon))

    @staticmethod
    def _self_immolation(spec: ProtocolSpec, stats: DegreeStats) -> RebelProtocol:
        if spec.q is not None and spec.tau is not None:
            params = SelfImmolationParams(q=spec.q, tau=spec.tau, c=spec.c)
        else:
            c = spec.c if spec.c is not None else SELF_IMMOLATION_DEFAULT_C
            params = SelfImmolationParams.from_network(stats.n, stats.median_degree, c)
            logger.info(f"Self-Immolation from c={c}: q={params.q:.4f}, tau={params.tau:.3f}")
        return SelfImmolationProtocol(params)

    @staticmethod
    def _baseline(spec: ProtocolSpec, stats: DegreeStats) -> RebelProtocol:
        return BaselineProtocol(message=spec.message, decide=spec.decide)
