"""Fox-Wright generalized hypergeometric series and the plain pFq series."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional, Sequence, Tuple

from .errors import ConvergenceViolation, DomainError, NonConvergence
from .series import sum_series
from .specfun import SignedLog, gamma, is_pole, log_gamma_signed, reciprocal_gamma, reciprocal_gamma_signed

Pair = Tuple[float, float]


def _pairs(items: Sequence[Sequence[float]]) -> Tuple[Pair, ...]:
    out = []
    for item in items:
        offset, weight = item
        out.append((float(offset), float(weight)))
    return tuple(out)


@dataclass(frozen=True)
class WrightSeries:
    """Upper pairs ``(a_i, alpha_i)`` and lower pairs ``(b_j, beta_j)`` of pPsiq."""

    upper: Tuple[Pair, ...] = field(default_factory=tuple)
    lower: Tuple[Pair, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        object.__setattr__(self, "upper", _pairs(self.upper))
        object.__setattr__(self, "lower", _pairs(self.lower))

    def __add__(self, other: "WrightSeries") -> "WrightSeries":
        return WrightSeries(self.upper + other.upper, self.lower + other.lower)


def convergence_index(series: WrightSeries) -> float:
    """``sum(beta_j) - sum(alpha_i)``; the series is usable when this exceeds -1."""
    return math.fsum(w for _, w in series.lower) - math.fsum(w for _, w in series.upper)


def convergence_radius(series: WrightSeries) -> float:
    """Radius of convergence when the index is exactly -1 (``inf`` above -1, 0 below)."""
    index = convergence_index(series)
    if abs(index + 1.0) > 1e-12:
        return math.inf if index > -1.0 else 0.0
    log_rho = math.fsum(b * math.log(abs(b)) for _, b in series.lower if b != 0) \
        - math.fsum(a * math.log(abs(a)) for _, a in series.upper if a != 0)
    return math.exp(log_rho)


def wright_eval(series: WrightSeries, z: float) -> float:
    """Sum ``prod Gamma(a_i + alpha_i k) / prod Gamma(b_j + beta_j k) * z^k / k!``.

    Requires a convergence index above -1, or exactly -1 with ``|z|`` inside
    the finite radius (the pFq-like case).  Numerator gammas raise
    :class:`PoleError` on a pole; denominator poles make the term vanish.
    """
    z = float(z)
    index = convergence_index(series)
    if not index > -1.0 + 1e-12:
        rho = convergence_radius(series)
        if not abs(z) < rho:
            raise ConvergenceViolation(
                f"convergence index {index!r} must exceed -1 (or equal -1 with |z| < {rho!r})")
    if z == 0.0:
        value = 1.0
        for a, _ in series.upper:
            value *= gamma(a)
        for b, _ in series.lower:
            value *= reciprocal_gamma(b)
        return value

    log_z = math.log(abs(z))
    z_neg = z < 0

    def term(k: int) -> Optional[float]:
        acc = SignedLog(k * log_z - math.lgamma(k + 1.0), -1 if (z_neg and k % 2) else 1)
        for b, beta in series.lower:
            r = reciprocal_gamma_signed(b + beta * k)
            if r.sign == 0:
                return None
            acc = acc * r
        for a, alpha in series.upper:
            acc = acc * log_gamma_signed(a + alpha * k)
        return acc.value()

    return sum_series(term)


def pfq_eval(upper: Sequence[float], lower: Sequence[float], z: float) -> float:
    """Generalized hypergeometric series ``pFq(upper; lower; z)``."""
    upper = [float(a) for a in upper]
    lower = [float(b) for b in lower]
    z = float(z)
    for b in lower:
        if is_pole(b):
            raise DomainError(f"lower parameter {b!r} is a non-positive integer")
    terminating = any(is_pole(a) for a in upper)
    if z != 0.0 and not terminating:
        excess = len(upper) - len(lower) - 1
        if excess > 0 or (excess == 0 and abs(z) >= 1.0):
            raise NonConvergence(f"{len(upper)}F{len(lower)} series diverges at z={z!r}")

    state = [1.0]

    def term(n: int) -> float:
        if n == 0:
            return 1.0
        m = n - 1
        t = state[0] * z / n
        for a in upper:
            t *= a + m
        for b in lower:
            t /= b + m
        state[0] = t
        return t

    return sum_series(term)
