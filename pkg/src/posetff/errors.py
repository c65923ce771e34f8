"""Exception types shared across the package."""


class PosetFFError(Exception):
    """Base class for all library errors."""


class CycleError(PosetFFError):
    """The input relation admits a directed cycle, so no strict order exists."""


class IdOutOfRange(PosetFFError):
    """An element or vertex id falls outside [0, n)."""


class SizeMismatch(PosetFFError):
    """Two structures that must share an element universe do not."""


class MalformedInterval(PosetFFError):
    """An interval whose left endpoint exceeds its right endpoint."""


class BudgetExhausted(PosetFFError):
    """A budgeted search ran out of nodes before completing; result unknown."""


class TooLarge(PosetFFError):
    """Instance exceeds the size limit of an exact (exponential) oracle."""


class CoverageError(PosetFFError):
    """A partition or coloring does not cover the ground set exactly once."""


class InvalidBlock(PosetFFError):
    """A block violates its segment invariants for the given chain partition."""


class NoUpSet(PosetFFError):
    """Asked for a good element of a block whose up-set is empty."""


class InternalError(PosetFFError):
    """A step that is provably unreachable was reached; signals a bug."""


class InvalidDecomposition(PosetFFError):
    """A path decomposition failed validation against its graph."""


class InvalidColoring(PosetFFError):
    """A coloring failed First-Fit validation against its graph."""


class ParamError(PosetFFError):
    """Generator parameters outside the supported domain."""


class OutOfRange(PosetFFError):
    """Element index outside a generated family's universe."""


class GaveUp(PosetFFError):
    """Rejection sampling exceeded its retry allowance."""
