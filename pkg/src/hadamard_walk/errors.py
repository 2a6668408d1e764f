"""Exception hierarchy; each class carries the CLI exit code it maps to."""


class WalkError(Exception):
    exit_code = 1


class DomainError(WalkError, ValueError):
    """Argument outside the mathematical domain of an operation."""

    exit_code = 2


class RegimeError(DomainError):
    """Asymptotic evaluator called outside its regime of validity."""


class AccuracyError(WalkError, ArithmeticError):
    """A numerical procedure failed to reach its requested tolerance."""

    exit_code = 3

    def __init__(self, message, last_delta=None):
        super().__init__(message)
        self.last_delta = last_delta


class ResourceError(WalkError, RuntimeError):
    """Configured budget (integer size, node count, ...) exceeded."""

    exit_code = 4
