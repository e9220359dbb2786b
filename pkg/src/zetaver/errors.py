"""Exception hierarchy shared by every numeric routine in the package."""


class ZetaverError(Exception):
    """Base class for all library errors."""


class DomainError(ZetaverError):
    """Argument outside the validity region of an operation."""


class PoleError(ZetaverError):
    """Evaluation requested at a pole of the function."""


class PoleTooCloseError(ZetaverError):
    """A contour abscissa runs too close to a pole of the integrand."""


class ConvergenceError(ZetaverError):
    """An adaptive scheme exhausted its budget before reaching tolerance."""


class DivergenceError(ZetaverError):
    """The requested integral or series does not converge."""


class ConfigError(ZetaverError):
    """Invalid suite, grid, or configuration input."""
