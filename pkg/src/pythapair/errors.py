"""Exception hierarchy shared by every layer of the package."""


class PythaError(Exception):
    """Base class for all package errors."""


class DomainError(PythaError, ValueError):
    """An argument lies outside the domain of an arithmetic primitive."""


class NonPositive(PythaError, ValueError):
    pass


class NotPythagorean(PythaError, ValueError):
    pass


class BadParams(PythaError, ValueError):
    pass


class OffCurve(PythaError, ValueError):
    pass


class NotIntegral(PythaError, ValueError):
    pass


class SizeLimit(PythaError):
    """Coordinates or multipliers grew beyond a configured cap."""


class DegenerateParams(PythaError, ValueError):
    pass


class ZeroX(PythaError, ValueError):
    pass


class FactoringLimit(PythaError):
    pass


class DegenerateDoubling(PythaError):
    """2P is the point at infinity or has x-coordinate 0."""


class NotASquareRatio(PythaError):
    pass


class NotExpectedShape(PythaError):
    pass


class DegenerateWitness(PythaError):
    """The extracted (r, s) has s = 0 or otherwise fails r > s >= 1."""


class NotAWitness(PythaError, ValueError):
    pass


class NonSquareLift(PythaError):
    pass


class TorsionInput(PythaError, ValueError):
    pass
