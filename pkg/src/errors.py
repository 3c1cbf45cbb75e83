#!/usr/bin/env python3

"""Exception hierarchy. Everything raised on bad input is a ValueError."""


class HyperconvexError(ValueError):
    """Base class for domain errors reported by the CLI with exit code 1"""


class InstanceMismatchError(HyperconvexError):
    pass


class ArityError(HyperconvexError):
    pass


class HyperfieldZeroDivisionError(HyperconvexError, ZeroDivisionError):
    pass


class NoOrderingError(HyperconvexError):
    pass


class UnsupportedError(HyperconvexError):
    pass


class NonDenseError(UnsupportedError):
    pass


class PreconditionError(HyperconvexError):
    pass


class InfeasibleError(HyperconvexError):
    pass


class WitnessError(HyperconvexError):
    pass


class ParseError(HyperconvexError):
    pass


class TableFormatError(ParseError):
    pass


class AxiomError(HyperconvexError):
    """Table loaded but fails the hyperfield axioms; carries the report"""

    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report


class SeparationNotFound(HyperconvexError):
    pass


class KakutaniCounterexample(HyperconvexError):
    pass


class WeakDualityViolation(HyperconvexError):
    pass
