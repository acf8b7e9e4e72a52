"""Exception hierarchy for kummerlab.

Each class maps onto one failure mode of the library; the CLI translates
them into exit codes (see ``kummerlab.cli``).
"""


class KummerLabError(Exception):
    """Base class for all library errors."""


class NotAnOddPrime(KummerLabError, ValueError):
    pass


class BadPrecision(KummerLabError, ValueError):
    pass


class ContextMismatch(KummerLabError, ValueError):
    pass


class NotAUnit(KummerLabError, ArithmeticError):
    pass


class BadGaloisIndex(KummerLabError, ValueError):
    pass


class DivisibleByP(KummerLabError, ValueError):
    pass


class PrecisionTooLow(KummerLabError, ArithmeticError):
    pass


class NotAPthPower(KummerLabError, ArithmeticError):
    pass


class WildRamification(KummerLabError, ValueError):
    pass


class BadDegree(KummerLabError, ValueError):
    pass


class BadIndex(KummerLabError, ValueError):
    pass


class TooLarge(KummerLabError, ValueError):
    pass


class OutOfConfiguredRange(KummerLabError, ValueError):
    pass


class GeneratorNotPrimar(KummerLabError, AssertionError):
    """Internal consistency failure: a P-bar generator failed the primär test."""


class IntersectionNonTrivial(KummerLabError, AssertionError):
    pass


class CertificateImpossible(KummerLabError, AssertionError):
    pass


class ParseError(KummerLabError, ValueError):
    def __init__(self, message, position):
        super().__init__(f"{message} at offset {position}")
        self.position = position
