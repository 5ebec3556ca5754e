"""Exception hierarchy shared by all modules."""


class HypertreeError(Exception):
    """Base class for errors raised by this package."""


class ValidationError(HypertreeError, ValueError):
    """A hypergraph is structurally malformed (bad edge size, label out of range, duplicates)."""


class DomainError(HypertreeError, ValueError):
    """An argument is outside the domain of an operation."""


class ResourceLimitError(HypertreeError):
    """A size parameter exceeds the configured desk-scale ceiling."""


class ConvergenceError(HypertreeError, RuntimeError):
    """An iterative solver failed to stabilise; this indicates a bug."""


class StabilityError(HypertreeError, RuntimeError):
    """An interpolated polynomial missed its out-of-sample guard value; a counting bug."""
