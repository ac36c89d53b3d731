"""Exception hierarchy shared by all coverpebbling modules."""


class PebblingError(Exception):
    """Base class for every error raised by this package."""


class NotConnectedError(PebblingError):
    """Graph is not (strongly) connected; cover pebbling costs would be infinite."""


class InvalidEdgeError(PebblingError):
    """Edge list contains an out-of-range endpoint, a self-loop, or a duplicate."""


class MixedDirectednessError(PebblingError):
    """Cartesian product factors must both be directed or both be undirected."""


class BadParamsError(PebblingError):
    """Family generator or closed form called with parameters outside its range."""


class DimensionMismatchError(PebblingError):
    """Distribution, goal, and graph sizes do not agree."""


class InsufficientPebblesError(PebblingError):
    """A move needs two pebbles on the source node."""


class NotAnEdgeError(PebblingError):
    """A move was requested along a pair that is not an edge."""


class ValueNotPresentError(PebblingError):
    """A valued move named a parent value that is not on the source node."""


class CheckedOverflowError(PebblingError):
    """A count, value, or cost left the unsigned 64-bit domain.

    All pebble arithmetic is specified over u64 with checked semantics:
    exceeding the bound is reported, never wrapped.
    """


class BudgetExceededError(PebblingError):
    """The exhaustive search visited more states than its budget allows."""


class ProofViolationError(PebblingError):
    """An invariant the collapse procedure guarantees failed at runtime.

    This always indicates a bug (or a caller bypassing the procedure's
    preconditions), so it is surfaced loudly instead of being handled.
    """
