"""Exception hierarchy shared across the package."""


class QNewtonError(Exception):
    """Base class for every error raised by qnewton."""


class CycleError(QNewtonError, ValueError):
    """The input relation contains a directed cycle."""


class RangeError(QNewtonError, ValueError):
    """A label or parameter lies outside its allowed range."""


class SizeError(QNewtonError, ValueError):
    """A request exceeds an enumeration guard."""


class BudgetError(QNewtonError, RuntimeError):
    """An enumeration produced more items than the caller's cap."""


class EmptyDescentError(QNewtonError, ValueError):
    pass


class EmptySetError(QNewtonError, ValueError):
    pass


class DomainError(QNewtonError, ValueError):
    pass


class InexactDivision(QNewtonError, ArithmeticError):
    pass


class DuplicateNode(QNewtonError, ValueError):
    pass


class ZeroPolynomial(QNewtonError, ValueError):
    pass


class NotNaturallyLabeled(QNewtonError, ValueError):
    pass


class SpecError(QNewtonError, ValueError):
    """Invalid parameters for a C(a_1, ..., a_m; h) polygon."""
