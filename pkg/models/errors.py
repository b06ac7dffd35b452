"""
Exception hierarchy for concyclic triangulation.
Every domain error is a ValueError so callers can catch input problems uniformly.
"""


class ConcyclicError(ValueError):
    """Base class for all domain errors."""
    code = "input"
    exit_code = 1


class NotConcyclic(ConcyclicError):
    code = "not_concyclic"


class CollinearInput(ConcyclicError):
    code = "collinear"


class DuplicatePoint(ConcyclicError):
    code = "duplicate_point"


class IndexOutOfRange(ConcyclicError):
    code = "index_out_of_range"


class EqualIndices(ConcyclicError):
    code = "equal_indices"


class KindMismatch(ConcyclicError):
    code = "kind_mismatch"


class LengthMismatch(ConcyclicError):
    code = "length_mismatch"


class CrossingEars(ConcyclicError):
    code = "crossing_ears"


class SameApex(ConcyclicError):
    code = "same_apex"


class TooSmall(ConcyclicError):
    code = "too_small"


class LimitIsZero(ConcyclicError):
    code = "limit_is_zero"


class TooLarge(ConcyclicError):
    """Guard violation: the instance is beyond what exhaustive search can handle."""
    code = "too_large"
    exit_code = 2


class PreconditionViolated(ConcyclicError):
    """The input does not satisfy the degeneracy class a solver requires."""
    code = "precondition"
    exit_code = 2


class SolverInconsistency(RuntimeError):
    """Internal cross-check failed (e.g. angle and length scoring disagree)."""
    code = "internal"
    exit_code = 3


class GenerationFailed(ConcyclicError):
    """A seeded generator ran out of attempts without meeting its acceptance test."""
    code = "generation"
