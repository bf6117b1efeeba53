"""Builds police strategies from configuration."""

from src.errors import InvalidConfigurationError
from src.models.model_config import PoliceSpec
from src.models.model_police import PoliceKind
from src.police.strategies import NoArrestPolice, NpThresholdPolice, Police, ReversePolice
from src.protocols.base import RebelProtocol


class PoliceRegistry:
    """Maps police kinds to builders bound to the rebel protocol in use.

    The police knows the rebel protocol: Reverse simulates its decision rule,
    and the threshold police tests against its epsilon unless one is given.
    """

    def build(self, spec: PoliceSpec, protocol: RebelProtocol) -> Police:
        match spec.kind:
            case PoliceKind.REVERSE:
                return ReversePolice(protocol)
            case PoliceKind.NP_THRESHOLD:
                epsilon = spec.epsilon if spec.epsilon is not None else protocol.epsilon
                if epsilon is None:
                    raise InvalidConfigurationError(
                        f"Threshold police needs an epsilon; {protocol.kind.value} has none"
                    )
                return NpThresholdPolice(epsilon)
            case _:
                return NoArrestPolice()

    def build_all(self, specs: list[PoliceSpec], protocol: RebelProtocol) -> list[Police]:
        """Build every configured police; labels must be unique."""
        polices = [self.build(spec, protocol) for spec in specs]
        labels = [p.label for p in polices]
        if len(set(labels)) != len(labels):
            raise InvalidConfigurationError(f"Duplicate police strategies: {labels}")
        return polices
