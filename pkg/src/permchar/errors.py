"""Shared exception types."""


class UsageError(ValueError):
    """Invalid input or API misuse (bad arguments, violated preconditions)."""


class CapExceeded(RuntimeError):
    """A configured resource cap was exceeded."""


class HypothesisNotMet(UsageError):
    """Verifier input does not satisfy the theorem's hypotheses."""
