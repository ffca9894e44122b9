"""Exception types. The CLI reports the class name on stderr."""


class ModlinkError(ValueError):
    """Base class for domain errors."""


class EmptyWord(ModlinkError):
    pass


class SingleLetterWord(ModlinkError):
    """Only one of L, R occurs: the element is parabolic, not hyperbolic."""


class NonPrimitiveWord(ModlinkError):
    pass


class WordSyntaxError(ModlinkError):
    pass


class DuplicateComponent(ModlinkError):
    pass


class NotInFamily(ModlinkError):
    pass


class ZeroDirection(ModlinkError):
    pass


class NotCoprime(ModlinkError):
    pass


class StartEndMismatch(ModlinkError):
    pass


# The two below signal broken internal invariants rather than bad input.


class MissingWinding(ModlinkError):
    pass


class BoundMismatch(ModlinkError):
    pass
