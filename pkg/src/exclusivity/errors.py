"""Exception types shared across the toolkit."""


class DimensionMismatch(ValueError):
    """Operands live in different Hilbert-space dimensions."""


class NotNormalized(ValueError):
    """A state vector deviates from unit norm beyond tolerance."""


class NotHermitian(ValueError):
    """An operator is not Hermitian within tolerance."""


class NotOrthogonal(ValueError):
    """Input vectors that must be pairwise orthogonal are not."""


class InvalidDistance(ValueError):
    """A circulant distance exceeds floor(n/2) or is non-positive."""


class TooLarge(ValueError):
    """Graph exceeds the size limit of an exhaustive algorithm."""


class IndexOutOfRange(ValueError):
    """A vertex index falls outside the graph's vertex set."""


class GraphShapeMismatch(ValueError):
    """A graph does not have the vertex count an operation requires."""


class ProbabilityOutOfRange(ValueError):
    """A probability input falls outside [0, 1]."""


class NonPositiveInput(ValueError):
    """An input that must be strictly positive is not."""


class InvalidDistribution(ValueError):
    """An outcome distribution is negative or does not sum to 1."""


class ParseError(ValueError):
    """A serialized artifact could not be parsed; message names the spot."""


class InvariantViolation(ValueError):
    """A structural invariant failed re-validation; message names the check."""
