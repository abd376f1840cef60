"""Generalized Galue-type Struve function, Fox-Wright series, and numerical
verification of unified integrals built on the Oberhettinger and
Lavoie-Trottier formulas."""

from .errors import (ConvergenceViolation, DomainError, NaNDetected, NonConvergence, ParseError,
                     PoleError, PreconditionError, ValidationError)
from .gtsf import GtsfParams, gtsf_eval, gtsf_wright_form, struve_h_eval
from .identities import CaseId, IdentityCase, IdentityReport, Status, verify_case
from .quadrature import QuadResult, integrate_half_line, integrate_unit_interval
from .specfun import SignedLog, gamma, log_gamma_signed, pochhammer, reciprocal_gamma
from .wright import WrightSeries, convergence_index, pfq_eval, wright_eval

__all__ = [
    "CaseId", "ConvergenceViolation", "DomainError", "GtsfParams", "IdentityCase",
    "IdentityReport", "NaNDetected", "NonConvergence", "ParseError", "PoleError",
    "PreconditionError", "QuadResult", "SignedLog", "Status", "ValidationError", "WrightSeries",
    "convergence_index", "gamma", "gtsf_eval", "gtsf_wright_form", "integrate_half_line",
    "integrate_unit_interval", "log_gamma_signed", "pfq_eval", "pochhammer", "reciprocal_gamma",
    "struve_h_eval", "verify_case", "wright_eval",
]
