"""Exception types shared across the package."""


class DyonOscError(Exception):
    """Base class for every domain error raised by this package."""


class UnsupportedDimensionError(DyonOscError):
    """Operation requested for a dimension it is not defined in."""


class DegenerateFiberError(DyonOscError):
    """Fiber angles requested at a point where the chart breaks down."""


class InvalidParameterError(DyonOscError):
    """A numeric parameter is outside the admissible range."""


class InvalidQuantumNumbersError(DyonOscError):
    """Quantum numbers violate their constraints (range, parity, triangle)."""


class DomainError(DyonOscError):
    """Physical parameter outside its domain (negative energy scale etc.)."""


class NoBoundStateError(DyonOscError):
    """Inverse duality map requested for a non-negative dyon energy."""


class SingularityError(DyonOscError):
    """Evaluation point sits on (or too close to) a field singularity."""


class QuantizationError(DyonOscError):
    """Magnetic/electric charge pair violates the half-integer condition."""


class ConvergenceError(DyonOscError):
    """An iterative numerical procedure failed to reach its tolerance."""
