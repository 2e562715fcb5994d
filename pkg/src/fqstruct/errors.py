"""Exception hierarchy shared by every module of the package."""


class FqError(ValueError):
    """Base class for bad inputs to field and theorem routines."""


class NotPrime(FqError):
    pass


class EvenCharacteristic(FqError):
    pass


class FieldOverflow(FqError, OverflowError):
    pass


class DivisionByZero(ZeroDivisionError):
    pass


class BadOrder(FqError):
    pass


class ZeroElement(FqError):
    pass


class DegenerateTau(FqError):
    pass


class DegenerateU(FqError):
    pass


class DegenerateJ(FqError):
    pass


class ZeroC(FqError):
    pass


class BadParameters(FqError):
    pass


class NotApplicable(FqError):
    """The identity has no statement for this field or parameter."""


class CharacteristicThree(NotApplicable):
    pass


class CharacteristicFive(NotApplicable):
    pass


class CapExceeded(FqError):
    pass


class IdentityFailure(AssertionError):
    """An identity failed; ``counterexample`` holds the offending values."""

    def __init__(self, message, **counterexample):
        super().__init__(message)
        self.counterexample = counterexample
