"""Role sampling and population regimes."""

from src.population.roles import regime, sample_roles

__all__ = ["regime", "sample_roles"]
