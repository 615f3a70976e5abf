"""Custom exceptions for geolift"""

from typing import Optional, Sequence


class GeoLiftError(Exception):
    """Base exception for geolift errors"""
    pass


# --- cartan -----------------------------------------------------------------


class CartanError(GeoLiftError):
    """Root system / Weyl group error"""
    pass


class InvalidType(CartanError):
    """(series, rank) is not a finite Cartan type"""
    pass


class IndexOutOfRange(CartanError):
    """A node index is outside 1..n"""
    pass


class NotReduced(CartanError):
    """A word that must be reduced is not"""
    pass


class NotDominant(CartanError):
    """A weight that must be dominant has a negative coordinate"""
    pass


class NotSameElement(CartanError):
    """Two words do not represent the same Weyl group element"""
    pass


class PathSearchExhausted(CartanError):
    """Breadth-first braid search hit its node bound.

    Attributes:
        visited: number of words explored before giving up
    """
    def __init__(self, message: str, *, visited: int):
        super().__init__(message)
        self.visited = visited


# --- lifting ----------------------------------------------------------------


class LiftingError(GeoLiftError):
    """Matrix realization error"""
    pass


class ZeroTorusParameter(LiftingError):
    """t^{α^∨} requested with t = 0"""
    pass


class LengthMismatch(LiftingError):
    """Parameter vector and word have different lengths"""
    pass


class NonPositiveParameter(LiftingError):
    """A parameter that must be strictly positive is not"""
    pass


class NotInG0(LiftingError):
    """Gaussian decomposition does not exist.

    Attributes:
        minor: 1-based index of the first vanishing leading principal minor
    """
    def __init__(self, message: str, *, minor: int):
        super().__init__(message)
        self.minor = minor


class UnsupportedRank2Type(LiftingError):
    """No matrix realization is available for this rank-2 braid move"""
    pass


class UnsupportedType(GeoLiftError):
    """Operation needs a realization or oracle that only exists in type A"""
    pass


# --- tropical ---------------------------------------------------------------


class TropicalError(GeoLiftError):
    """Subtraction-free expression / piecewise-linear map error"""
    pass


class ParseError(TropicalError):
    """Malformed expression text.

    Attributes:
        position: 0-based offset of the offending character
    """
    def __init__(self, message: str, *, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class SubtractionForbidden(ParseError):
    """A '-' appeared in subtraction-free input"""
    pass


class NonPositivePoint(TropicalError):
    """Evaluation point has a non-positive coordinate"""
    pass


class ArityMismatch(TropicalError):
    """Map and point (or two maps) disagree on the number of variables"""
    pass


class NotSubtractionFree(TropicalError):
    """A rational function has no non-negative numerator/denominator certificate.

    Attributes:
        coefficients: the offending coefficients, when known
    """
    def __init__(self, message: str, *, coefficients: Optional[Sequence[int]] = None):
        super().__init__(message)
        self.coefficients = list(coefficients or [])


# --- parametrize / oracle ---------------------------------------------------


class ParametrizeError(GeoLiftError):
    """Parametrization error"""
    pass


class OracleError(GeoLiftError):
    """Tableau crystal error"""
    pass


class SizeBound(OracleError):
    """Crystal generation exceeded the configured vertex bound.

    Attributes:
        bound: the configured bound
    """
    def __init__(self, message: str, *, bound: int):
        super().__init__(message)
        self.bound = bound


class ResidueNotHighest(OracleError):
    """String extraction did not end at the highest weight tableau"""
    pass


class NotUnique(OracleError):
    """A crystal has zero or several vertices where exactly one is expected"""
    pass
