"""Exception types shared across the package."""


class RingLabError(Exception):
    """Base class for every error raised by ringlab."""


class InvalidOrderError(RingLabError):
    pass


class OrderBoundError(RingLabError):
    """A construction would exceed the configured maximum order."""


class RingMismatchError(RingLabError):
    pass


class AxiomError(RingLabError):
    """A table, action or map failed verification.

    ``axiom`` names the failed law and ``witness`` holds the offending
    element indices.
    """

    def __init__(self, axiom, witness=(), detail=""):
        self.axiom = axiom
        self.witness = tuple(witness)
        msg = f"axiom violated: {axiom} (witness {self.witness})"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)


class NotPrimeError(RingLabError):
    pass


class NotPhiRingError(RingLabError):
    pass


class DegenerateRingError(RingLabError):
    """The zero ring produced by localizing at a set containing 0 was used
    as an ordinary ring."""
