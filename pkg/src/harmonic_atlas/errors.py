"""Exception types shared across the package."""


class HarmonicAtlasError(Exception):
    """Base class for all package errors."""


class ZeroConstantTerm(HarmonicAtlasError):
    """Series reciprocal requested for a series with c0 = 0."""


class InvalidExpression(HarmonicAtlasError):
    """Expression violates a construction invariant (e.g. a denominator
    vanishes inside the open unit disk, or a log argument is not 1 at 0)."""


class PoleAtOrigin(InvalidExpression):
    """Rational term has a pole at z = 0 that does not cancel."""


class NearPole(HarmonicAtlasError):
    """Evaluation point lies within eps_pole of a denominator root."""


class NotNormalized(HarmonicAtlasError):
    """Shear input violates phi(0) = 0, phi'(0) = 1 or omega(0) = 0."""


class DilatationTooLarge(HarmonicAtlasError):
    """Grid maximum of |omega| reaches 1; the shear would not be
    sense-preserving."""


class UnknownId(HarmonicAtlasError, KeyError):
    """Catalog lookup for an id that does not exist."""


class SeriesMismatch(HarmonicAtlasError):
    """An exact series identity that was required to hold does not."""


class ZeroValue(HarmonicAtlasError):
    """A quantity that must be bounded away from zero is numerically zero."""
