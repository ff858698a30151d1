"""Exception hierarchy.

Every error raised by the library derives from :class:`SemigroupError`, so
callers (the CLI in particular) can catch one type and report the concrete
class name.
"""


class SemigroupError(ValueError):
    """Base class for all library errors."""


class EmptyGenerators(SemigroupError):
    pass


class GcdNotOne(SemigroupError):
    """The generators share a common factor, so the complement is infinite."""


class NotOdd(SemigroupError):
    pass


class DegreeTooSmall(SemigroupError):
    pass


class ParityError(SemigroupError):
    pass


class OddBranchCount(SemigroupError):
    pass


class NotACoverCase(SemigroupError):
    pass


class InvalidParameters(SemigroupError):
    pass


class ClassMismatch(SemigroupError):
    pass


class NotEffective(SemigroupError):
    pass
