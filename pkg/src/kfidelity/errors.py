"""Exception hierarchy. Every error is a ``ValueError`` so callers can catch broadly."""


class KFidelityError(ValueError):
    """Base class for all input/validation failures raised by this package."""


class NotHermitian(KFidelityError):
    pass


class NotPositive(KFidelityError):
    pass


class BadRank(KFidelityError):
    pass


class DimMismatch(KFidelityError):
    pass


class LengthMismatch(KFidelityError):
    pass


class NotAPair(KFidelityError):
    """``ABA = A`` or ``BAB = B`` fails."""


class RankMismatch(KFidelityError):
    """``Tr AB`` is not an integer matching the numeric ranks of A, B and AB."""


class NotBiorthogonal(KFidelityError):
    pass


class SingularBlock(KFidelityError):
    pass


class ZeroVector(KFidelityError):
    pass


class IllConditioned(KFidelityError):
    pass


class SingularState(KFidelityError):
    pass


class BadK(KFidelityError):
    pass


class NotEquivalent(KFidelityError):
    pass


class NotOrthogonal(KFidelityError):
    pass
