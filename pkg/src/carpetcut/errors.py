"""Exception hierarchy.

Every domain error derives from :class:`CarpetError`; the CLI prints the class
name verbatim and exits with status 1.
"""


class CarpetError(Exception):
    """Base class for all domain errors."""


class SpecError(CarpetError, ValueError):
    pass


class TrivialDigitSet(SpecError):
    pass


class DigitOutOfRange(SpecError):
    pass


class DuplicateDigit(SpecError):
    pass


class InvalidWord(CarpetError, ValueError):
    pass


class InvalidDigit(InvalidWord):
    pass


class EmptyWord(InvalidWord):
    pass


class LevelMismatch(CarpetError, ValueError):
    pass


class EmptyDigitSet(CarpetError, ValueError):
    pass


class BadBase(CarpetError, ValueError):
    pass


class NotSingleton(CarpetError, ValueError):
    pass


class LevelTooLarge(CarpetError):
    def __init__(self, vertices: int, cap: int):
        super().__init__(f"{vertices} vertices exceeds the cap of {cap}")
        self.vertices = vertices
        self.cap = cap


class DisconnectedGraph(CarpetError):
    pass


class DisconnectedCarpet(CarpetError):
    pass


class DisconnectedInput(DisconnectedCarpet):
    pass


class FragileInput(CarpetError):
    pass


class BadPartition(CarpetError, ValueError):
    pass


class PreconditionUnverified(CarpetError):
    pass


class Inconclusive(CarpetError):
    pass


class PointNotInCarpet(CarpetError, ValueError):
    pass


class UnknownPreset(CarpetError, KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else ""


class BadParameter(CarpetError, ValueError):
    pass
