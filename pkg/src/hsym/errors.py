class InvalidInput(ValueError):
    """Malformed or out-of-range arguments (bad rank, node index, weight length)."""


class DomainError(ValueError):
    """Arguments outside the mathematical domain of the operation."""


class UndefinedJError(DomainError):
    """J is undefined: trivial weight, vanishing sections, or h0 <= rank."""


class ResourceLimit(RuntimeError):
    """Computation exceeds the configured size guard."""
