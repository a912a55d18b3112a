"""Exception hierarchy.

Every error raised by the package derives from :class:`FramelabError`, so
callers (and the command line driver) can catch one type.
"""


class FramelabError(Exception):
    """Base class for all package errors."""


class InvalidInput(FramelabError):
    """An argument violates a documented precondition."""


class EmptyMatrix(FramelabError):
    """A matrix argument has zero rows or zero columns."""


class NonHermitian(FramelabError):
    """A matrix argument is not Hermitian within tolerance (or not square)."""


class EmptyInput(FramelabError):
    """A sequence argument is empty where at least one entry is required."""


class SingularOperator(FramelabError):
    """A linear solve met a matrix that is not positive definite."""


class DimensionMismatch(FramelabError):
    """Vector or coefficient lengths do not match the model dimension."""


class ZeroVector(FramelabError):
    """The zero vector was passed where a nonzero vector is required."""


class NegativePower(FramelabError):
    """A power index must be a nonnegative integer."""


class KernelVector(FramelabError):
    """The vector lies in the kernel of the operator."""


class KernelSeed(KernelVector):
    """A seed vector lies in the kernel where the scaling rule forbids it."""


class OffsetOutOfRange(FramelabError):
    """A shift offset exceeds the window radius or points below index zero."""


class EmptyFamily(FramelabError):
    """A vector family is empty."""


class NotAFrame(FramelabError):
    """The family is numerically incomplete; no dual family exists."""


class PointOutsideDisk(FramelabError):
    """A point expected inside the open unit disk has modulus >= 1."""


class NotSorted(FramelabError):
    """An index sequence is not strictly increasing."""


class InvalidDelta(FramelabError):
    """A separation or concentration threshold is out of range."""


class LengthMismatch(FramelabError):
    """Two parallel sequences have different lengths."""


class InvalidRadii(FramelabError):
    """Annulus radii must satisfy 0 < r_min < r_max."""


class ParseError(FramelabError):
    """A configuration document is not valid JSON."""


class ValidationError(FramelabError):
    """A configuration document is valid JSON but violates the schema.

    The message names the offending field path, e.g. ``operator.atoms[2].weight``.
    """
