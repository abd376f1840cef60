"""Real gamma-function core: gamma, signed log-gamma, 1/gamma and Pochhammer.

Gamma values come from :func:`math.gamma` / :func:`math.lgamma` (Lanczos based
in CPython).  Everything here works on real arguments only.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import PoleError

POLE_TOL = 1e-12
POCHHAMMER_PRODUCT_MAX = 64


@dataclass(frozen=True)
class SignedLog:
    """A real number stored as ``sign * exp(log_abs)``.

    ``sign == 0`` encodes an exact zero; ``log_abs`` is then meaningless.
    """

    log_abs: float
    sign: int

    @classmethod
    def from_float(cls, value: float) -> "SignedLog":
        if value == 0.0:
            return ZERO
        return cls(math.log(abs(value)), 1 if value > 0 else -1)

    def __mul__(self, other: "SignedLog") -> "SignedLog":
        if self.sign == 0 or other.sign == 0:
            return ZERO
        return SignedLog(self.log_abs + other.log_abs, self.sign * other.sign)

    def __truediv__(self, other: "SignedLog") -> "SignedLog":
        if other.sign == 0:
            raise ZeroDivisionError("division by a zero SignedLog")
        if self.sign == 0:
            return ZERO
        return SignedLog(self.log_abs - other.log_abs, self.sign * other.sign)

    def __pow__(self, n: int) -> "SignedLog":
        if self.sign == 0:
            return ONE if n == 0 else ZERO
        return SignedLog(self.log_abs * n, 1 if n % 2 == 0 else self.sign)

    def inverse(self) -> "SignedLog":
        return ONE / self

    def __float__(self) -> float:
        return self.value()

    def value(self) -> float:
        """Exponentiate back to a float (may overflow to ``OverflowError``)."""
        if self.sign == 0:
            return 0.0
        return self.sign * math.exp(self.log_abs)


ZERO = SignedLog(0.0, 0)
ONE = SignedLog(0.0, 1)


def is_pole(x: float) -> bool:
    """True when ``x`` is within ``POLE_TOL`` of a non-positive integer."""
    if x > 0.5:
        return False
    return abs(x - round(x)) <= POLE_TOL


def _check_pole(x: float) -> None:
    if is_pole(x):
        raise PoleError(f"gamma has a pole at x={x!r}")


def _gamma_sign(x: float) -> int:
    if x > 0:
        return 1
    return 1 if math.floor(x) % 2 == 0 else -1


def gamma(x: float) -> float:
    """Gamma function of a real argument.

    Raises :class:`PoleError` at non-positive integers and ``OverflowError``
    when the result is not representable as a float.
    """
    _check_pole(x)
    try:
        return math.gamma(x)
    except OverflowError:
        raise OverflowError(f"gamma({x!r}) overflows float range") from None


def log_gamma_signed(x: float) -> SignedLog:
    """``Gamma(x)`` as a :class:`SignedLog`, usable far beyond float overflow."""
    _check_pole(x)
    sign = _gamma_sign(x)
    # Direct evaluation where representable keeps exp(log_abs) consistent
    # with gamma() to a couple of ulps; lgamma covers the rest.
    if -170.0 < x < 171.0:
        g = math.gamma(x)
        if g != 0.0 and math.isfinite(g):
            return SignedLog(math.log(abs(g)), sign)
    return SignedLog(math.lgamma(x), sign)


def reciprocal_gamma(x: float) -> float:
    """``1/Gamma(x)``, with the entire-function value 0 at the poles."""
    if is_pole(x):
        return 0.0
    if 0.0 < x < 171.0 or -170.0 < x < 0.0:
        g = math.gamma(x)
        if g != 0.0 and math.isfinite(g):
            return 1.0 / g
    lg = log_gamma_signed(x)
    if -lg.log_abs > 709.0:
        return math.copysign(math.inf, lg.sign)
    return lg.sign * math.exp(-lg.log_abs)


def reciprocal_gamma_signed(x: float) -> SignedLog:
    """``1/Gamma(x)`` as a :class:`SignedLog` (``ZERO`` at the poles)."""
    if is_pole(x):
        return ZERO
    return log_gamma_signed(x).inverse()


def pochhammer(lam: float, n: int) -> float:
    """Rising factorial ``(lam)_n = lam (lam+1) ... (lam+n-1)``.

    The product form is used for ``n <= 64`` and whenever ``lam`` is a
    non-positive integer; larger ``n`` goes through a gamma ratio.
    """
    if n < 0:
        raise ValueError("n must be a nonnegative integer")
    if n <= POCHHAMMER_PRODUCT_MAX or is_pole(lam):
        result = 1.0
        for j in range(n):
            result *= lam + j
        return result
    return (log_gamma_signed(lam + n) / log_gamma_signed(lam)).value()
