"""Numerical checks of the unified integrals of the generalized Struve function.

Every theorem case is evaluated three ways:

* ``lhs``: the defining integral by double-exponential quadrature,
* ``rhs_printed``: the closed Fox-Wright form exactly as published,
* ``rhs_derived``: the series obtained by integrating the Struve series term
  by term against the Oberhettinger or Lavoie-Trottier base integrals.

The two base integrals are checked on their own as ``BASE_OBER`` and
``BASE_LT``.
"""
from __future__ import annotations

import enum
import math
import random
from dataclasses import dataclass, replace
from typing import Callable, List, Optional, Tuple

from .errors import DomainError, GalueError, NonConvergence, PreconditionError
from .gtsf import STRUVE_SPECIALIZATION, GtsfParams, gtsf_eval, half_power
from .quadrature import QuadResult, integrate_half_line, integrate_unit_interval
from .series import sum_series
from .specfun import SignedLog, gamma, log_gamma_signed, reciprocal_gamma_signed
from .wright import WrightSeries, wright_eval

DEFAULT_TOL = 1e-6
QUAD_TOL_RATIO = 0.01
REL_ERR_FLOOR = 1e-300


class CaseId(str, enum.Enum):
    T1 = "T1"
    T2 = "T2"
    T3 = "T3"
    T4 = "T4"
    C31 = "C31"
    C32 = "C32"
    C33 = "C33"
    C34 = "C34"
    BASE_OBER = "BASE_OBER"
    BASE_LT = "BASE_LT"


class Status(str, enum.Enum):
    CONFIRMED = "CONFIRMED"
    DISCREPANT = "DISCREPANT"
    INCONCLUSIVE = "INCONCLUSIVE"


THEOREM_CASES = (CaseId.T1, CaseId.T2, CaseId.T3, CaseId.T4)
COROLLARY_CASES = (CaseId.C31, CaseId.C32, CaseId.C33, CaseId.C34)
BASE_CASES = (CaseId.BASE_OBER, CaseId.BASE_LT)
COROLLARY_OF = dict(zip(COROLLARY_CASES, THEOREM_CASES))

# which base integral a theorem is built on, and how the Struve argument
# depends on x
_FAMILY = {
    CaseId.T1: "ober_scaled",
    CaseId.T2: "ober_linear",
    CaseId.T3: "lt_complement",
    CaseId.T4: "lt_linear",
}
for _c, _t in COROLLARY_OF.items():
    _FAMILY[_c] = _FAMILY[_t]


def family(case_id: CaseId) -> str:
    return _FAMILY[case_id]


@dataclass(frozen=True)
class IdentityCase:
    """One parameter point of one identity.

    ``lam``/``mu`` belong to the Oberhettinger-type cases, ``alpha``/``beta``
    to the Lavoie-Trottier-type ones, ``shift_a`` is the kernel constant.
    """

    case_id: CaseId
    gtsf: Optional[GtsfParams] = None
    lam: Optional[float] = None
    mu: Optional[float] = None
    alpha: Optional[float] = None
    beta: Optional[float] = None
    shift_a: Optional[float] = None
    y: Optional[float] = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "case_id", CaseId(self.case_id))
        for name in ("lam", "mu", "alpha", "beta", "shift_a", "y"):
            v = getattr(self, name)
            if v is not None:
                v = float(v)
                if not math.isfinite(v):
                    raise PreconditionError(f"{name} must be finite")
                object.__setattr__(self, name, v)
        _validate(self)

    def parameters(self) -> dict:
        """Flat parameter dict (only the fields this case uses)."""
        out = {}
        if self.gtsf is not None:
            g = self.gtsf
            out.update(ord_a=g.ord_a, p=g.p, b=g.b, c=g.c, xi=g.xi, nu=g.nu, delta=g.delta)
        for name in ("lam", "mu", "alpha", "beta", "shift_a", "y"):
            v = getattr(self, name)
            if v is not None:
                out[name] = v
        return out


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise PreconditionError(message)


def _need(case: IdentityCase, *names: str) -> None:
    for name in names:
        _require(getattr(case, name) is not None, f"{case.case_id.value} requires {name}")


def _validate(case: IdentityCase) -> None:
    cid = case.case_id
    if cid is CaseId.BASE_OBER:
        _need(case, "mu", "lam", "shift_a")
        _require(0 < case.mu < case.lam, "BASE_OBER requires 0 < mu < lambda")
        _require(case.shift_a > 0, "shift_a must be positive")
        return
    if cid is CaseId.BASE_LT:
        _need(case, "alpha", "beta")
        _require(case.alpha > 0 and case.beta > 0, "BASE_LT requires alpha > 0 and beta > 0")
        return
    _need(case, "gtsf", "y")
    _require(case.y >= 0, "y must be nonnegative")
    g = case.gtsf
    if case.y == 0:
        _require(g.p + 1 > 0, "y = 0 requires p + 1 > 0")
    if cid in COROLLARY_CASES:
        for name, value in STRUVE_SPECIALIZATION.items():
            _require(getattr(g, name) == value, f"{cid.value} requires {name} = {value}")
    fam = family(cid)
    if fam.startswith("ober"):
        _need(case, "mu", "lam", "shift_a")
        _require(case.shift_a > 0, "shift_a must be positive")
        _require(0 < case.mu < case.lam + g.p + 1, f"{cid.value} requires 0 < mu < lambda + p + 1")
        if fam == "ober_linear":
            _require(case.mu + g.p + 1 > 0, f"{cid.value} requires mu + p + 1 > 0")
            _require(case.mu < case.lam, f"{cid.value} requires mu < lambda")
    else:
        _need(case, "alpha", "beta")
        if fam == "lt_complement":
            _require(case.alpha > 0 and case.beta + g.p + 1 > 0,
                     f"{cid.value} requires alpha > 0 and beta + p + 1 > 0")
        else:
            _require(case.beta > 0 and case.alpha + g.p + 1 > 0,
                     f"{cid.value} requires beta > 0 and alpha + p + 1 > 0")


@dataclass(frozen=True)
class IdentityReport:
    case: IdentityCase
    lhs: QuadResult
    rhs_printed: float
    rhs_derived: float
    rel_err_printed: float
    rel_err_derived: float
    status_printed: Status
    status_derived: Status
    note: str = ""


# -- base integrals ---------------------------------------------------------

def oberhettinger_kernel(x: float, shift_a: float) -> float:
    """``x + a + sqrt(x^2 + 2 a x)`` with the radicand kept factored."""
    if x < 0 or shift_a <= 0:
        raise DomainError(f"kernel needs x >= 0 and shift_a > 0, got x={x!r}, shift_a={shift_a!r}")
    return x + shift_a + math.sqrt(x) * math.sqrt(x + 2.0 * shift_a)


def oberhettinger_closed(mu: float, lam: float, shift_a: float) -> SignedLog:
    """Closed form ``2 lam a^-lam (a/2)^mu Gamma(2mu) Gamma(lam-mu) / Gamma(1+lam+mu)``."""
    log_a = math.log(shift_a)
    head = SignedLog.from_float(2.0 * lam) * SignedLog(-lam * log_a + mu * (log_a - math.log(2.0)), 1)
    return (head * log_gamma_signed(2.0 * mu) * log_gamma_signed(lam - mu)
            * reciprocal_gamma_signed(1.0 + lam + mu))


def lavoie_trottier_closed(alpha: float, beta: float) -> SignedLog:
    """Closed form ``(2/3)^(2 alpha) Gamma(alpha) Gamma(beta) / Gamma(alpha+beta)``."""
    head = SignedLog(2.0 * alpha * math.log(2.0 / 3.0), 1)
    return (head * log_gamma_signed(alpha) * log_gamma_signed(beta)
            * reciprocal_gamma_signed(alpha + beta))


def oberhettinger_integrand(mu: float, lam: float, shift_a: float) -> Callable[[float], float]:
    def f(x: float) -> float:
        # single exp: the two powers overflow separately at far nodes
        return math.exp((mu - 1.0) * math.log(x) - lam * math.log(oberhettinger_kernel(x, shift_a)))
    return f


def lavoie_trottier_weight(alpha: float, beta: float) -> Callable[[float], float]:
    def f(x: float) -> float:
        return (x ** (alpha - 1.0) * (1.0 - x) ** (2.0 * beta - 1.0)
                * (1.0 - x / 3.0) ** (2.0 * alpha - 1.0) * (1.0 - x / 4.0) ** (beta - 1.0))
    return f


# -- the three quantities ---------------------------------------------------

def _integrand(case: IdentityCase) -> Callable[[float], float]:
    cid = case.case_id
    if cid is CaseId.BASE_OBER:
        return oberhettinger_integrand(case.mu, case.lam, case.shift_a)
    if cid is CaseId.BASE_LT:
        return lavoie_trottier_weight(case.alpha, case.beta)
    g, y = case.gtsf, case.y
    fam = family(cid)
    if fam.startswith("ober"):
        mu, lam, a = case.mu, case.lam, case.shift_a
        linear = fam == "ober_linear"

        def f(x: float) -> float:
            k = oberhettinger_kernel(x, a)
            z = (x * y if linear else y) / k
            return math.exp((mu - 1.0) * math.log(x) - lam * math.log(k)) * gtsf_eval(g, z)
        return f

    weight = lavoie_trottier_weight(case.alpha, case.beta)
    if fam == "lt_complement":
        def argument(x: float) -> float:
            return y * (1.0 - x / 4.0) * (1.0 - x) ** 2
    else:
        def argument(x: float) -> float:
            return y * x * (1.0 - x / 3.0) ** 2

    def f(x: float) -> float:
        return weight(x) * gtsf_eval(g, argument(x))
    return f


def _on_half_line(case: IdentityCase) -> bool:
    if case.case_id in BASE_CASES:
        return case.case_id is CaseId.BASE_OBER
    return family(case.case_id).startswith("ober")


def lhs_integral(case: IdentityCase, tol: float) -> QuadResult:
    """Integrate the left-hand side at quadrature tolerance ``tol``."""
    f = _integrand(case)
    if _on_half_line(case):
        return integrate_half_line(f, tol)
    return integrate_unit_interval(f, tol)


def _base_rhs(case: IdentityCase) -> float:
    if case.case_id is CaseId.BASE_OBER:
        return oberhettinger_closed(case.mu, case.lam, case.shift_a).value()
    return lavoie_trottier_closed(case.alpha, case.beta).value()


def printed_form(case: IdentityCase) -> Tuple[float, WrightSeries, float]:
    """Return ``(prefactor, series, argument)`` of the published closed form."""
    cid = case.case_id
    if cid in BASE_CASES:
        raise PreconditionError("base formulas have no Wright-series form")
    g, y = case.gtsf, case.y
    p, b, c = g.p, g.b, g.c
    struve_lower = [(g.delta, g.nu), (p / g.xi + b / 2.0 + 1.0, g.ord_a)]
    corollary_lower = [(p + (b + 2.0) / 2.0, 1.0)]
    three_halves = [(1.5, 1.0)]
    y_pow = 0.0 if y == 0 else y ** (p + 1.0)

    if cid in (CaseId.T1, CaseId.C31):
        mu, lam, a = case.mu, case.lam, case.shift_a
        pre = 2.0 ** (-mu - p) * a ** (mu - lam - p - 1.0) * y_pow * gamma(2.0 * mu)
        upper = [(lam + p + 2.0, 2.0), (lam - mu + p + 1.0, 2.0), (1.0, 1.0)]
        tail = [(lam + p + 1.0, 2.0), (lam + mu + p + 2.0, 2.0)]
        arg = -c * y * y / (4.0 * a * a)
    elif cid in (CaseId.T2, CaseId.C32):
        mu, lam, a = case.mu, case.lam, case.shift_a
        pre = 2.0 ** (-mu - 2.0 * p) * a ** (mu - lam - 1.0) * y_pow * gamma(lam - mu + 1.0)
        upper = [(lam + p + 2.0, 2.0), (2.0 * mu + 2.0 * p, 4.0), (1.0, 1.0)]
        tail = [(lam + p + 1.0, 2.0), (lam + mu + 2.0 * p + 2.0, 4.0)]
        arg = -c * y * y / 4.0
    elif cid in (CaseId.T3, CaseId.C33):
        alpha, beta = case.alpha, case.beta
        pre = (2.0 / 3.0) ** (2.0 * alpha) * half_power(y, p + 1.0) * gamma(2.0 * alpha)
        upper = [(beta + p + 1.0, 2.0), (1.0, 1.0)]
        tail = [(2.0 * alpha + beta + p + 1.0, 2.0)]
        arg = -c * y * y / 4.0
    else:
        alpha, beta = case.alpha, case.beta
        pre = (2.0 / 3.0) ** (2.0 * (alpha + p + 1.0)) * half_power(y, p + 1.0) * gamma(beta)
        upper = [(2.0 * alpha + 2.0 * p + 2.0, 4.0), (1.0, 1.0)]
        tail = [(2.0 * alpha + beta + 2.0 * p + 2.0, 4.0)]
        arg = -4.0 * c * y * y / 81.0

    if cid in COROLLARY_CASES:
        lower = corollary_lower + tail + three_halves
    else:
        lower = struve_lower + tail
    return pre, WrightSeries(upper, lower), arg


def rhs_printed(case: IdentityCase) -> float:
    """Evaluate the closed form as published (base cases: the base formula)."""
    if case.case_id in BASE_CASES:
        return _base_rhs(case)
    pre, series, arg = printed_form(case)
    if pre == 0.0:
        return 0.0
    return pre * wright_eval(series, arg)


def _base_integral(case: IdentityCase, k: int) -> SignedLog:
    """Closed-form base integral with the parameters shifted by series term ``k``."""
    shift = 2.0 * k + case.gtsf.p + 1.0
    fam = family(case.case_id)
    if fam == "ober_scaled":
        return oberhettinger_closed(case.mu, case.lam + shift, case.shift_a)
    if fam == "ober_linear":
        return oberhettinger_closed(case.mu + shift, case.lam + shift, case.shift_a)
    if fam == "lt_complement":
        return lavoie_trottier_closed(case.alpha, case.beta + shift)
    return lavoie_trottier_closed(case.alpha + shift, case.beta)


def derived_terms(case: IdentityCase) -> Callable[[int], Optional[float]]:
    """Term ``k`` of the term-wise integrated series (``None`` on a 1/Gamma pole)."""
    g, y = case.gtsf, case.y
    log_half_y = math.log(y / 2.0)
    log_c = math.log(abs(g.c)) if g.c != 0 else 0.0
    c_sign = -1 if g.c > 0 else 1
    off2 = g.second_offset

    def term(k: int) -> Optional[float]:
        r1 = reciprocal_gamma_signed(g.nu * k + g.delta)
        r2 = reciprocal_gamma_signed(g.ord_a * k + off2)
        if r1.sign == 0 or r2.sign == 0:
            return None
        coeff = SignedLog(k * log_c + (2 * k + g.p + 1.0) * log_half_y,
                          c_sign if k % 2 else 1) * r1 * r2
        return (coeff * _base_integral(case, k)).value()

    return term


def rhs_derived(case: IdentityCase, tol: float = DEFAULT_TOL) -> float:
    """Sum the term-wise integrated Struve series.

    ``tol`` is accepted for interface symmetry; the series is always summed
    to full working precision.
    """
    if case.case_id in BASE_CASES:
        return _base_rhs(case)
    if case.y == 0:
        return 0.0
    term = derived_terms(case)
    if case.gtsf.c == 0:
        t = term(0)
        return 0.0 if t is None else t
    return sum_series(term)


# -- comparison -------------------------------------------------------------

def relative_error(rhs: float, lhs: float) -> float:
    return abs(rhs - lhs) / max(abs(lhs), REL_ERR_FLOOR)


def classify(rel_err: float, lhs: QuadResult, tol: float) -> Status:
    """CONFIRMED / DISCREPANT / INCONCLUSIVE from a relative error and the lhs estimate."""
    lhs_ok = lhs.abs_error_estimate <= tol * abs(lhs.value)
    if not (math.isfinite(rel_err) and math.isfinite(lhs.value)):
        return Status.INCONCLUSIVE
    if rel_err <= tol and lhs_ok:
        return Status.CONFIRMED
    if rel_err > 10.0 * tol and lhs.abs_error_estimate < tol * abs(lhs.value):
        return Status.DISCREPANT
    return Status.INCONCLUSIVE


_FAILED_LHS = QuadResult(math.nan, math.inf, 0)


def verify_case(case: IdentityCase, tol: float = DEFAULT_TOL, quad_tol: Optional[float] = None) -> IdentityReport:
    """Compute all three quantities for ``case`` and compare them.

    A discrepancy is a result, not an error.  Evaluation failures are caught
    and reported as INCONCLUSIVE with the reason in ``note``.
    """
    if quad_tol is None:
        quad_tol = tol * QUAD_TOL_RATIO
    notes = []
    try:
        lhs = lhs_integral(case, quad_tol)
    except NonConvergence as exc:
        lhs = getattr(exc, "result", _FAILED_LHS)
        notes.append(f"lhs: {exc}")
    except (GalueError, ArithmeticError, ValueError) as exc:
        lhs = _FAILED_LHS
        notes.append(f"lhs: {type(exc).__name__}: {exc}")

    def attempt(label: str, fn: Callable[[], float]) -> float:
        try:
            return fn()
        except (GalueError, ArithmeticError, ValueError) as exc:
            notes.append(f"{label}: {type(exc).__name__}: {exc}")
            return math.nan

    printed = attempt("rhs_printed", lambda: rhs_printed(case))
    derived = attempt("rhs_derived", lambda: rhs_derived(case, tol))
    err_p = relative_error(printed, lhs.value)
    err_d = relative_error(derived, lhs.value)
    return IdentityReport(
        case=case,
        lhs=lhs,
        rhs_printed=printed,
        rhs_derived=derived,
        rel_err_printed=err_p,
        rel_err_derived=err_d,
        status_printed=classify(err_p, lhs, tol),
        status_derived=classify(err_d, lhs, tol),
        note="; ".join(notes),
    )


def check_base_oberhettinger(mu: float, lam: float, shift_a: float, tol: float = DEFAULT_TOL,
                             quad_tol: Optional[float] = None) -> IdentityReport:
    return verify_case(IdentityCase(CaseId.BASE_OBER, mu=mu, lam=lam, shift_a=shift_a), tol, quad_tol)


def check_base_lavoie_trottier(alpha: float, beta: float, tol: float = DEFAULT_TOL,
                               quad_tol: Optional[float] = None) -> IdentityReport:
    return verify_case(IdentityCase(CaseId.BASE_LT, alpha=alpha, beta=beta), tol, quad_tol)


# -- parameter sampling -----------------------------------------------------

def _r(x: float) -> float:
    return round(x, 4)


def sample_gtsf(rng: random.Random, corollary: bool = False) -> GtsfParams:
    p = _r(rng.uniform(0.0, 1.5))
    b = _r(rng.uniform(0.0, 2.0))
    c = float(rng.choice((-1, 0, 1)))
    if corollary:
        return GtsfParams(p=p, b=b, c=c, **STRUVE_SPECIALIZATION)
    return GtsfParams(
        ord_a=rng.choice((1, 2)),
        p=p,
        b=b,
        c=c,
        xi=rng.choice((0.5, 1.0, 2.0)),
        nu=rng.choice((0.5, 1.0, 2.0)),
        delta=rng.choice((1.0, 1.5, 2.5)),
    )


def sample_case(case_id: CaseId, rng: random.Random) -> IdentityCase:
    """Draw one point from the desk-scale sampling region of ``case_id``."""
    cid = CaseId(case_id)
    if cid is CaseId.BASE_OBER:
        lam = _r(rng.uniform(1.0, 4.5))
        return IdentityCase(cid, mu=_r(rng.uniform(0.25, lam - 0.5)), lam=lam,
                            shift_a=rng.choice((0.5, 1.0, 2.0)))
    if cid is CaseId.BASE_LT:
        return IdentityCase(cid, alpha=_r(rng.uniform(0.5, 2.5)), beta=_r(rng.uniform(0.5, 2.5)))
    g = sample_gtsf(rng, corollary=cid in COROLLARY_CASES)
    y = _r(rng.uniform(0.25, 1.0))
    fam = family(cid)
    if fam == "ober_scaled":
        lam = _r(rng.uniform(0.5, 3.0))
        mu = _r(rng.uniform(0.25, min(2.0, lam + g.p + 0.5)))
        return IdentityCase(cid, gtsf=g, lam=lam, mu=mu, shift_a=rng.choice((0.5, 1.0, 2.0)), y=y)
    if fam == "ober_linear":
        lam = _r(rng.uniform(1.0, 3.0))
        mu = _r(rng.uniform(0.25, lam - 0.5))
        return IdentityCase(cid, gtsf=g, lam=lam, mu=mu, shift_a=rng.choice((0.5, 1.0, 2.0)), y=y)
    return IdentityCase(cid, gtsf=g, alpha=_r(rng.uniform(0.5, 2.0)), beta=_r(rng.uniform(0.5, 2.0)), y=y)


def sample_cases(case_id: CaseId, n: int, seed: int) -> List[IdentityCase]:
    rng = random.Random(seed)
    return [sample_case(case_id, rng) for _ in range(n)]


def specialize(case: IdentityCase) -> IdentityCase:
    """Theorem case -> matching corollary case (parameters must already match)."""
    for cor, thm in COROLLARY_OF.items():
        if case.case_id is thm:
            return replace(case, case_id=cor)
    raise PreconditionError(f"{case.case_id.value} has no corollary")
