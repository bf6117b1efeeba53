"""Gaussian tail, divergence and distance primitives.

P0 = N(0, 1) is the obedient signal distribution and P1 = N(eps, 1) the
rebel one. With k independent copies, the optimal distinguisher is the
likelihood-ratio test, a threshold on the sample mean at eps / 2, and its
advantage is exactly TV(P0^k, P1^k) = 2 Phi(eps sqrt(k) / 2) - 1.
"""

import math

import numpy as np
from scipy import integrate, special
from scipy.stats import norm

from src.errors import InvalidParameterError


def normal_cdf(z: float | np.ndarray) -> float | np.ndarray:
    """Standard normal CDF Phi(z)."""
    return special.ndtr(z)


def normal_tail(z: float | np.ndarray) -> float | np.ndarray:
    """Tail psi(z) = P(X >= z) = 1 - Phi(z), computed without cancellation."""
    return special.ndtr(-np.asarray(z)) if isinstance(z, np.ndarray) else float(special.ndtr(-z))


def kl_gauss(epsilon: float) -> float:
    """KL(N(0,1) || N(eps,1)) = eps^2 / 2."""
    return epsilon * epsilon / 2


def kl_gauss_numerical(epsilon: float) -> float:
    """KL divergence by quadrature of p0(x) log(p0(x) / p1(x))."""
    p0, p1 = norm(0.0, 1.0), norm(epsilon, 1.0)

    def integrand(x: float) -> float:
        return float(p0.pdf(x) * (p0.logpdf(x) - p1.logpdf(x)))

    value, _ = integrate.quad(integrand, -math.inf, math.inf, epsabs=1e-13, epsrel=1e-12)
    return float(value)


def tv_gauss(epsilon: float, copies: int = 1) -> float:
    """Total variation between N(0,1)^k and N(eps,1)^k.

    Raises:
        InvalidParameterError: If copies < 1
    """
    if copies < 1:
        raise InvalidParameterError(f"copies must be >= 1, got {copies}")
    half_gap = abs(epsilon) * math.sqrt(copies) / 2
    return 1.0 - 2.0 * float(special.ndtr(-half_gap))


def tv_gauss_numerical(epsilon: float) -> float:
    """Single-copy TV by quadrature of (1/2) |p0 - p1|, split at the crossing point."""
    p0, p1 = norm(0.0, 1.0), norm(epsilon, 1.0)

    def integrand(x: float) -> float:
        return float(abs(p0.pdf(x) - p1.pdf(x)))

    crossing = epsilon / 2
    left, _ = integrate.quad(integrand, -math.inf, crossing, epsabs=1e-14, epsrel=1e-13)
    right, _ = integrate.quad(integrand, crossing, math.inf, epsabs=1e-14, epsrel=1e-13)
    return 0.5 * float(left + right)


def pinsker_bound(epsilon: float) -> float:
    """sqrt(KL) = eps / sqrt(2), the upper bound on single-copy TV."""
    return math.sqrt(kl_gauss(epsilon))
