"""Exception hierarchy shared by every module of the package."""


class EvidenceError(ValueError):
    """Base class for all domain errors raised by this package."""


class FrameError(EvidenceError):
    pass


class DuplicateElement(FrameError):
    pass


class EmptyFrame(FrameError):
    pass


class EmptyElementName(FrameError):
    pass


class FrameTooLarge(FrameError):
    pass


class UnknownElement(FrameError):
    pass


class InvalidSubset(FrameError):
    """A subset key that does not fit in the frame's bit width."""


class FrameMismatch(EvidenceError):
    """Two operands are defined on different frames."""


class InvalidMass(EvidenceError):
    """A mass table that violates the mass-function invariants."""


class NegativeMass(InvalidMass):
    pass


class MassOnEmptySet(InvalidMass):
    pass


class SumNotOne(InvalidMass):
    pass


class DuplicateFocalElement(InvalidMass):
    pass


class NotAMassFunction(InvalidMass):
    """Inverting an evidential view did not produce a mass function."""


class TotalConflict(EvidenceError):
    """The orthogonal sum does not exist (normalization constant is zero)."""

    def __init__(self, message: str = "total conflict: orthogonal sum undefined"):
        super().__init__(message)


class EmptyOperandList(EvidenceError):
    pass


class InvalidKind(EvidenceError):
    pass


class InvalidRate(EvidenceError):
    """Discount rates must lie strictly between 0 and 1."""
