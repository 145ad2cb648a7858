"""Exception types shared across the package."""


class PinStructuresError(Exception):
    pass


class UnsupportedDegree(PinStructuresError):
    """A query needs cohomology or homology data beyond what is stored."""

    def __init__(self, needed: int, available: int, what: str = "ring"):
        self.needed = needed
        self.available = available
        super().__init__(
            f"degree {needed} requested but the {what} is only known "
            f"through degree {available}"
        )


class UnsupportedParameter(PinStructuresError):
    pass


class MisuseError(PinStructuresError):
    """Operands live in different rings, degrees, or non-product rings."""


class CorruptRingData(PinStructuresError):
    """Descriptor data violates a structural invariant of closed manifolds."""


class InvariantViolation(PinStructuresError):
    """Two independent computations disagree; this is a bug."""


class SearchSpaceExceeded(PinStructuresError):
    pass
