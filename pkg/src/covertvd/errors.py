"""Exception taxonomy shared by every module.

The CLI maps these onto exit codes (see cli.py): domain, regime, order and
fit violations exit 3; accuracy and consistency failures exit 4.
"""


class CovertvdError(Exception):
    """Base class for all library errors."""


class DomainError(CovertvdError, ValueError):
    """An argument lies outside an operation's stated domain."""


class RegimeError(CovertvdError, ValueError):
    """Arguments violate the validity regime of a series expansion."""


class OrderError(CovertvdError, ValueError):
    """Requested truncation order exceeds the supported range."""


class AccuracyError(CovertvdError, ArithmeticError):
    """An iterative method or quadrature failed to reach its accuracy target."""


class ConsistencyError(CovertvdError, RuntimeError):
    """An internal cross-check failed; indicates an implementation bug."""


class FitError(CovertvdError, ValueError):
    """Input series is unsuitable for rate fitting."""
