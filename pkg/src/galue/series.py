"""Compensated summation of slowly-settling power series."""
from __future__ import annotations

from typing import Callable, Optional

from .errors import NonConvergence

MAX_TERMS = 10_000
STOP_RTOL = 1e-16
MIN_TERMS = 4


class CompensatedSum:
    """Neumaier's variant of Kahan summation."""

    __slots__ = ("_sum", "_comp")

    def __init__(self) -> None:
        self._sum = 0.0
        self._comp = 0.0

    def add(self, x: float) -> None:
        s = self._sum
        t = s + x
        if abs(s) >= abs(x):
            self._comp += (s - t) + x
        else:
            self._comp += (x - t) + s
        self._sum = t

    @property
    def value(self) -> float:
        return self._sum + self._comp


def sum_series(term: Callable[[int], Optional[float]], max_terms: int = MAX_TERMS) -> float:
    """Sum ``term(0) + term(1) + ...`` until the tail is negligible.

    Stops after term ``k >= 4`` once two consecutive terms satisfy
    ``|t_k| <= 1e-16 |S_k|``.  ``term`` returns ``None`` for a term that
    vanishes only because a reciprocal gamma sits on a pole; such terms
    neither count towards nor reset the stopping test, so runs of pole zeros
    cannot end the summation early.
    """
    acc = CompensatedSum()
    quiet = 0
    for k in range(max_terms):
        t = term(k)
        if t is None:
            continue
        acc.add(t)
        if abs(t) <= STOP_RTOL * abs(acc.value):
            quiet += 1
            if quiet >= 2 and k >= MIN_TERMS:
                return acc.value
        else:
            quiet = 0
    raise NonConvergence(f"series not settled after {max_terms} terms (partial sum {acc.value!r})")
