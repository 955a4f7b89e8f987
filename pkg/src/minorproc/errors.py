"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of the operation."""


class ConvergenceError(RuntimeError):
    """A root finder exhausted its iteration budget."""


class GraphError(ValueError):
    """Structural misuse of a graph (self-loop, duplicate edge, bad label)."""


class InfeasibleStopError(ValueError):
    """A stop rule asks for more accepted edges than the class permits."""


class SizeLimitError(ValueError):
    """Input exceeds the size cap of a brute-force oracle."""
