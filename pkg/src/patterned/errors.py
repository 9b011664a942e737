"""Error types shared across the package.

Plain ``ValueError`` is used for bad user input; the classes here cover the
remaining failure modes that callers may want to tell apart.
"""


class ResourceLimitError(ValueError):
    """A requested computation would exceed a configured size cap."""


class ConvergenceError(RuntimeError):
    """An iterative numerical method failed to converge."""


class InvariantError(RuntimeError):
    """An internal consistency check failed; this always indicates a bug."""
