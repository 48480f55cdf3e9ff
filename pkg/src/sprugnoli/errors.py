"""Exception hierarchy shared by every module of the package."""


class SeriesError(ArithmeticError):
    """Base class for failures of truncated power series arithmetic."""


class PrecisionError(SeriesError, IndexError):
    """A coefficient was requested that the truncation does not determine."""


class NotInvertibleError(SeriesError):
    pass


class CompositionError(SeriesError):
    pass


class ReversionError(SeriesError):
    pass


class NoRationalSqrtError(SeriesError):
    pass


class DivisionUndefinedError(SeriesError, ZeroDivisionError):
    pass


class GroupMembershipError(ValueError):
    """A tuple of series failed the membership test of its matrix group."""


class SingularMatrixError(ArithmeticError):
    pass


class NotStripedError(ValueError):
    """A production matrix does not have the claimed periodic stripe structure."""
