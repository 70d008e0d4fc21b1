# src/kontsevich/exceptions.py

"""Kontsevich Intersection Exceptions

This module contains all custom exceptions raised by the intersection engine.
Every exception carries the process exit status the command line maps it to.
"""


class MbarBaseException(Exception):
    """Base exception for all intersection engine errors"""
    EXIT_CODE = 1

    def __init__(self, message: str, code: str = None) -> None:
        self.message = message
        self.code = code
        super().__init__(self.message)


class MbarUsageError(MbarBaseException):
    """Raised when a command or request is malformed"""
    EXIT_CODE = 2


class MonomialSyntaxError(MbarUsageError):
    """Raised when space, boundary or monomial text cannot be parsed"""
    def __init__(self, message: str, code: str = None) -> None:
        super().__init__(f"Syntax error: {message}", code)


class MbarDomainError(MbarBaseException):
    """Raised when a mathematical precondition fails"""
    EXIT_CODE = 3


class InvalidSpaceError(MbarDomainError):
    """Raised when (r, d, n) does not name a moduli space of stable maps"""
    ERROR_CODES = {
        "S01": "target dimension r must be at least 2",
        "S02": "degree d must be non-negative",
        "S03": "degree 0 maps need at least 3 markings",
        "S04": "number of markings must be non-negative",
    }

    def __init__(self, message: str, code: str = None) -> None:
        if code in self.ERROR_CODES:
            message = f"{message} - {self.ERROR_CODES[code]}"
        super().__init__(message, code)


class InvalidSymbolError(MbarDomainError):
    """Raised when a divisor symbol is not valid on its ambient space"""
    ERROR_CODES = {
        "Y01": "marking outside the marking set",
        "Y02": "unstable weighted partition",
        "Y03": "degree split out of range",
        "Y04": "index out of range",
    }

    def __init__(self, message: str, code: str = None) -> None:
        if code in self.ERROR_CODES:
            message = f"{message} - {self.ERROR_CODES[code]}"
        super().__init__(message, code)


class NotTopProductError(MbarDomainError):
    """Raised when a monomial degree differs from the space dimension"""
    def __init__(self, degree: int, dimension: int) -> None:
        super().__init__(
            f"not a top product: degree {degree} on a space of dimension {dimension}",
            "E01",
        )
        self.degree = degree
        self.dimension = dimension


class ScopeError(MbarDomainError):
    """Raised when an operation is requested outside its supported range"""
    pass


class ExcludedSpaceError(ScopeError):
    """Raised when M̄_{0,0}(2,2) is used where it must be routed around"""
    def __init__(self, operation: str) -> None:
        super().__init__(
            f"{operation} is not available on M̄_{{0,0}}(2,2); "
            "evaluate on M̄_{0,1}(2,2) through the forgetful pullback",
            "E02",
        )


class CharNumQueryError(MbarDomainError):
    """Raised when a characteristic number query violates its constraints"""
    pass


class UnderdeterminedSystemError(MbarDomainError):
    """Raised when harvested relations do not determine a requested invariant"""
    pass


class InconsistentRelationError(MbarDomainError):
    """Raised when harvested relations contradict each other"""
    pass


class RouteDisagreementError(MbarDomainError):
    """Raised when two independent computation routes give different values"""
    def __init__(self, what: str, first, second) -> None:
        super().__init__(f"{what}: routes disagree ({first} != {second})", "E03")
        self.first = first
        self.second = second


class IntegralityError(MbarDomainError):
    """Raised when an enumerative answer is not an integer"""
    pass


class MbarCacheError(MbarBaseException):
    """Raised when the persistent memo store cannot be read or written"""
    EXIT_CODE = 4


class CacheVersionError(MbarCacheError):
    """Raised when a cache file carries an unexpected version header"""
    pass


class CorruptCacheError(MbarCacheError):
    """Raised when a cache file or store contains an unusable entry"""
    pass
