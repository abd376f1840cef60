"""Generalized Galue-type Struve function and its Orhan-Yagmur special case.

The series evaluated here is

    sum_k (-c)^k / (Gamma(nu k + delta) Gamma(ord_a k + p/xi + (b+2)/2)) (z/2)^(2k+p+1)

which is entire in ``z``.  Only real parameters and real ``z`` are supported.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Optional

from .errors import DomainError
from .series import sum_series
from .specfun import SignedLog, reciprocal_gamma_signed
from .wright import WrightSeries, wright_eval


@dataclass(frozen=True)
class GtsfParams:
    """Parameters of the generalized Struve series.

    ``ord_a`` is the integer weight on ``k`` in the second gamma factor,
    ``nu``/``delta`` the weight and offset of the first one.
    """

    ord_a: int
    p: float
    b: float
    c: float
    xi: float
    nu: float
    delta: float

    def __post_init__(self) -> None:
        if isinstance(self.ord_a, bool) or int(self.ord_a) != self.ord_a or self.ord_a < 1:
            raise ValueError(f"ord_a must be a positive integer, got {self.ord_a!r}")
        object.__setattr__(self, "ord_a", int(self.ord_a))
        for name in ("p", "b", "c", "xi", "nu", "delta"):
            value = float(getattr(self, name))
            if not math.isfinite(value):
                raise ValueError(f"{name} must be finite, got {value!r}")
            object.__setattr__(self, name, value)
        if self.xi <= 0:
            raise ValueError(f"xi must be positive, got {self.xi!r}")
        if self.nu <= 0:
            raise ValueError(f"nu must be positive, got {self.nu!r}")

    @property
    def second_offset(self) -> float:
        """Offset ``p/xi + (b+2)/2`` of the second gamma argument."""
        return self.p / self.xi + (self.b + 2.0) / 2.0


STRUVE_SPECIALIZATION = dict(ord_a=1, xi=1.0, nu=1.0, delta=1.5)


def struve_params(p: float, b: float, c: float) -> GtsfParams:
    """Parameters that turn the generalized series into ``H_{p,b,c}``."""
    return GtsfParams(p=p, b=b, c=c, **STRUVE_SPECIALIZATION)


def _power_sign(z: float, exponent: float) -> int:
    """Sign of ``z**exponent`` for ``z != 0``; rejects non-real powers."""
    if z > 0:
        return 1
    if exponent != math.floor(exponent):
        raise DomainError(f"(z/2)**{exponent!r} is not real for z={z!r}")
    return -1 if int(exponent) % 2 else 1


def half_power(z: float, exponent: float) -> float:
    """``(z/2)**exponent`` restricted to real results."""
    if z == 0.0:
        if exponent > 0:
            return 0.0
        if exponent == 0:
            return 1.0
        raise DomainError(f"(z/2)**{exponent!r} is infinite at z=0")
    sign = _power_sign(z, exponent)
    return sign * math.exp(exponent * math.log(abs(z) / 2.0))


def _term_factory(params: GtsfParams, z: float):
    exponent = params.p + 1.0
    sign_z = _power_sign(z, exponent)
    log_half_z = math.log(abs(z) / 2.0)
    log_c = math.log(abs(params.c))
    c_sign = -1 if params.c > 0 else 1
    off2 = params.second_offset

    def term(k: int) -> Optional[float]:
        g1 = reciprocal_gamma_signed(params.nu * k + params.delta)
        g2 = reciprocal_gamma_signed(params.ord_a * k + off2)
        if g1.sign == 0 or g2.sign == 0:
            return None
        log_abs = k * log_c + (2 * k + exponent) * log_half_z + g1.log_abs + g2.log_abs
        sign = (c_sign if k % 2 else 1) * sign_z * g1.sign * g2.sign
        return SignedLog(log_abs, sign).value()

    return term


def _leading_term(params: GtsfParams, z: float) -> float:
    g = reciprocal_gamma_signed(params.delta) * reciprocal_gamma_signed(params.second_offset)
    return g.value() * half_power(z, params.p + 1.0)


def gtsf_terms(params: GtsfParams, z: float) -> Iterator[float]:
    """Yield the series terms ``k = 0, 1, 2, ...`` (pole terms as 0.0).

    The generator is infinite unless ``c`` or ``z`` vanishes, in which case
    only the leading term is produced.
    """
    if params.c == 0.0 or z == 0.0:
        yield _leading_term(params, z)
        return
    term = _term_factory(params, z)
    k = 0
    while True:
        t = term(k)
        yield 0.0 if t is None else t
        k += 1


def gtsf_eval(params: GtsfParams, z: float) -> float:
    """Evaluate the generalized Struve series at real ``z``.

    Negative ``z`` is accepted only when ``p + 1`` is an integer.
    """
    z = float(z)
    if params.c == 0.0 or z == 0.0:
        return _leading_term(params, z)
    return sum_series(_term_factory(params, z))


def struve_h_eval(p: float, b: float, c: float, z: float) -> float:
    """``H_{p,b,c}(z)``; with ``b = c = 1`` this is the classical ``H_p``."""
    return gtsf_eval(struve_params(p, b, c), z)


def gtsf_wright_form(params: GtsfParams, z: float) -> float:
    """Same function written as ``(z/2)^(p+1)`` times a 1Psi2 series.

    Independent of :func:`gtsf_eval`'s term construction; used as a
    consistency check.
    """
    z = float(z)
    series = WrightSeries(
        upper=[(1.0, 1.0)],
        lower=[(params.delta, params.nu), (params.p / params.xi + params.b / 2.0 + 1.0, float(params.ord_a))],
    )
    prefactor = half_power(z, params.p + 1.0)
    if prefactor == 0.0:
        return 0.0
    return prefactor * wright_eval(series, -params.c * z * z / 4.0)
