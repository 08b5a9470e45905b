"""Exception types raised by the rootfinding routines."""


class LaspaError(Exception):
    """Base class for all errors raised by this package."""


class EmptyRootList(LaspaError, ValueError):
    pass


class ZeroLeadingCoefficient(LaspaError, ValueError):
    pass


# find_all_roots reports input validation failures under this name
LeadingCoefficientZero = ZeroLeadingCoefficient


class DegreeTooLow(LaspaError, ValueError):
    pass


class NonFiniteValue(LaspaError, ValueError):
    pass


class RootAtShiftPoint(LaspaError, ArithmeticError):
    """The expansion point of a power-sum computation is a root."""


class DegenerateSums(LaspaError, ArithmeticError):
    """Power sums cancel, so their ratio says nothing about the nearest root."""


class SingularStep(LaspaError, ArithmeticError):
    """Both Laguerre denominators vanish."""


class PoleAtRoot(LaspaError, ArithmeticError):
    """The evaluation point coincides with one of the roots."""


class NotASimpleRoot(LaspaError, ValueError):
    pass


class SeedingFailed(LaspaError, RuntimeError):
    """The SPA shift iteration did not reach a convergence disk.

    ``last`` holds the final shift point; ``partial`` carries whatever
    roots were already found when raised from the full solver.
    """

    def __init__(self, message, last=None, partial=None):
        super().__init__(message)
        self.last = last
        self.partial = list(partial) if partial is not None else []


class ParseError(LaspaError, ValueError):
    def __init__(self, index, token, reason="invalid complex number"):
        super().__init__(f"entry {index}: {reason}: {token!r}")
        self.index = index
        self.token = token
