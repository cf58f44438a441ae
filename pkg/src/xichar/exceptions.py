"""Exception hierarchy for xichar."""

from __future__ import annotations


class XiCharError(Exception):
    """Base class for every error raised by this package."""


# group construction and group-theoretic searches

class InvalidPermutation(XiCharError, ValueError):
    pass


class ClosureCapExceeded(XiCharError):
    pass


class SylowSearchFailed(XiCharError):
    pass


class NotLinear(XiCharError, ValueError):
    pass


# exact arithmetic

class OrderMismatch(XiCharError, ValueError):
    pass


class NotCoprime(XiCharError, ValueError):
    pass


class NotRationalInteger(XiCharError, ValueError):
    pass


# character tables

class SplitFailure(XiCharError):
    pass


class LiftInconsistency(XiCharError):
    pass


# Artin induction and the minimality check

class NonIntegralInducedValue(XiCharError):
    pass


class NoIntegerSolution(XiCharError):
    pass


class WitnessUnexpectedlyIntegral(XiCharError):
    pass


# input handling

class ParseError(XiCharError, ValueError):
    def __init__(self, message: str, text: str = "", position: int | None = None):
        self.text = text
        self.position = position
        if position is not None:
            message = f"{message} (at position {position} in {text!r})"
        super().__init__(message)


class UnsupportedFamily(XiCharError, ValueError):
    pass
