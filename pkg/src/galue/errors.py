"""Exception hierarchy shared by every module of the package."""


class GalueError(Exception):
    """Base class for all errors raised by this package."""


class PoleError(GalueError, ValueError):
    """A gamma function was evaluated at (or within tolerance of) a pole."""


class DomainError(GalueError, ValueError):
    """An argument lies outside the real domain of the function."""


class NonConvergence(GalueError, ArithmeticError):
    """A series or quadrature hit its iteration cap before meeting tolerance."""


class ConvergenceViolation(GalueError, ValueError):
    """A Wright series fails the convergence condition on its weights."""


class NaNDetected(GalueError, ArithmeticError):
    """An integrand returned a non-finite value at a quadrature node."""


class PreconditionError(GalueError, ValueError):
    """Parameters fall outside the validity region of an identity."""


class ConfigError(GalueError):
    """Base class for suite-configuration problems."""


class ParseError(ConfigError):
    """The configuration file could not be read or parsed."""


class ValidationError(ConfigError):
    """The configuration parsed but violates a field or case invariant."""


class IoError(GalueError, OSError):
    """A report could not be written."""
