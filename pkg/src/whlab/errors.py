"""Exception hierarchy.

Every error raised for bad input derives from :class:`WHLabError` (itself a
``ValueError``) so the command line front end can map them to exit status 2.
"""


class WHLabError(ValueError):
    pass


class InvalidSignPattern(WHLabError):
    pass


class NonIntegerDimension(WHLabError):
    pass


class DimensionMismatch(WHLabError):
    pass


class NotSingleParameter(WHLabError):
    pass


class InvalidCase(WHLabError):
    pass


class IndexOutOfRange(WHLabError):
    pass


class InsufficientGrid(WHLabError):
    pass


class OutsideDomain(WHLabError):
    pass


class TypeIUndefined(WHLabError):
    """Klauder-Perelomov states on an infinite space need a single parameter."""


class BGFiniteComplexUndefined(WHLabError):
    """Barut-Girardello states with complex label do not exist in finite dimension."""


class InvalidTruncation(WHLabError):
    pass
