"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class UPDError(Exception):
    """Base class for all errors raised by :mod:`upd`."""


class ContextMismatch(UPDError, ValueError):
    """Operands live in different polynomial rings (or have the wrong arity)."""


class UnitIdealError(UPDError, ValueError):
    """Operation is undefined for the unit ideal."""


class ZeroIdealError(UPDError, ValueError):
    """Operation is undefined for the zero ideal (e.g. colon by zero)."""


class AssemblyError(UPDError):
    """Per-prime components do not assemble into a primary decomposition."""


class IntersectionMismatch(AssemblyError):
    pass


class NotPrimary(AssemblyError):
    pass


class RedundantComponent(AssemblyError):
    pass


class CapExceeded(UPDError):
    """A monotone search ran past its cap.

    This says the cap was too small, not that no answer exists.
    """

    def __init__(self, what: str, cap: int, prime=None, n=None):
        super().__init__(what, cap, prime, n)
        self.what = what
        self.cap = cap
        self.prime = prime
        self.n = n

    def __str__(self):
        where = "" if self.n is None else f" at n={list(self.n)}"
        p = "" if self.prime is None else f" for P={self.prime}"
        return f"{self.what} exceeds cap={self.cap}{p}{where}; rerun with a larger --cap"


class KTooSmall(UPDError):
    """The exponent k is below what the bounded decomposition needs."""

    def __init__(self, k: int, reason: str, prime=None, n=None):
        super().__init__(k, reason, prime, n)
        self.k = k
        self.reason = reason
        self.prime = prime
        self.n = n

    def __str__(self):
        where = "" if self.n is None else f" at n={list(self.n)}"
        return f"k={self.k} too small{where}: {self.reason}"


class ParseError(UPDError, ValueError):
    """Malformed family/ideal JSON. Carries a 1-based line and column."""

    def __init__(self, message: str, line: int = 1, column: int = 1):
        self.message = message
        self.line = line
        self.column = column
        super().__init__(f"{message} (line {line}, column {column})")

    def __reduce__(self):
        return (type(self), (self.message, self.line, self.column))
