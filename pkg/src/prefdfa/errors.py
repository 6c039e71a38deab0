"""Exception hierarchy shared across the package."""


class PrefdfaError(Exception):
    """Base class for all domain errors raised by this package."""


class AlphabetError(PrefdfaError):
    """A symbol or word does not belong to the governing alphabet."""


class FormatError(PrefdfaError):
    """A text document (sample, automaton, word list) could not be parsed."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class ClosureConflictError(PrefdfaError):
    """Closing a sample derived two contradictory relations for one word pair.

    Signals that the sample is not drawn from any preorder.
    """

    def __init__(self, message, kind, pair=None):
        super().__init__(message)
        self.kind = kind
        self.pair = pair


class OrderCycleError(ClosureConflictError):
    """A strict-preference cycle: two distinct elements each above the other."""

    def __init__(self, message, pair=None):
        super().__init__(message, kind="strict-cycle", pair=pair)


class RankingInconsistentError(PrefdfaError):
    """A partition block holds two distinct defined ranks."""


class BlockError(PrefdfaError):
    """A block handed to a partition operation is not part of the partition."""


class UnreachableStateError(PrefdfaError):
    """An automaton state cannot be reached from the initial state."""

    def __init__(self, states):
        super().__init__("unreachable states: " + ", ".join(sorted(states)))
        self.states = frozenset(states)


class BoundsExceededError(PrefdfaError):
    """Exhaustive-search parameters exceed the supported instance size."""


class RetryExhaustedError(PrefdfaError):
    """Random word generation could not produce enough distinct words."""


class EmptySetError(PrefdfaError):
    """A construction requires a nonempty word set."""
