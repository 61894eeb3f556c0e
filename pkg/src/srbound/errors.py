"""Exception types shared across the package."""


class SRBoundError(Exception):
    """Base class for all library errors."""


class InvalidInput(SRBoundError, ValueError):
    """Malformed input (shape mismatch, zero vector, bad character...)."""


class NotPositive(InvalidInput):
    """The lattice meets the positive orthant in a nonzero point."""

    def __init__(self, witness):
        self.witness = tuple(witness)
        super().__init__(f"lattice is not positive: {list(self.witness)} lies in L and in N^m")


class NotStronglyConvex(InvalidInput):
    """A nonzero nonnegative combination of the generators vanishes."""

    def __init__(self, witness):
        self.witness = tuple(witness)
        super().__init__(
            f"cone is not strongly convex: coefficients {list(self.witness)} give a zero combination"
        )


class PointOutsideCone(SRBoundError, ValueError):
    pass


class ComponentTooLarge(SRBoundError):
    """Exact clique cover refused; carries the best interval that is known."""

    def __init__(self, cap, size, lower, upper):
        self.cap = cap
        self.size = size
        self.lower = lower
        self.upper = upper
        super().__init__(
            f"component with {size} vertices exceeds the exact clique-cover cap {cap}; "
            f"c lies in [{lower}, {upper}]"
        )


class ResourceLimit(SRBoundError):
    pass
