"""Exception types shared across the package."""


class CurveComplexError(Exception):
    """Base class for all package errors."""


class NonHyperbolicSurface(CurveComplexError):
    """Requested surface has non-negative Euler characteristic."""


class SurfaceMismatch(CurveComplexError):
    """Operands live on different surfaces."""


class MatchingViolation(CurveComplexError):
    """Weight vector violates the per-triangle matching conditions."""


class Disconnected(CurveComplexError):
    """Weight vector encodes a multicurve, not a single curve."""


class Inessential(CurveComplexError):
    """Curve is trivial or parallel to a boundary component."""


class NotDisjoint(CurveComplexError):
    """Multicurve members intersect."""


class NotATorelliVertex(CurveComplexError):
    """Twist requested about a vertex that is neither separating nor a BP."""


class UnsupportedHalfTwist(CurveComplexError):
    """No boundary-exchange symmetry is available for this half twist."""


class EmptyBase(CurveComplexError):
    """Orbit enumeration started from an empty base set."""


class NotMaximal(CurveComplexError):
    """Simplex is not maximal in its complex."""


class NotRooted(CurveComplexError):
    """BP set has no common root structure."""


class NotFoundInCatalog(CurveComplexError):
    """Search target absent from the catalog."""


class NonUniqueInCatalog(CurveComplexError):
    """A curve required to be unique has several catalog matches."""


class InvariantViolation(CurveComplexError):
    """A structural fact that must hold was falsified; treat as test failure."""


class CatalogTooSmall(CurveComplexError):
    """Catalog lacks the witness curves needed for a check."""


class Inconsistent(CurveComplexError):
    """Extension witnesses disagree; carries a machine-readable certificate."""

    def __init__(self, message, certificate=None):
        super().__init__(message)
        self.certificate = certificate


class NoWitness(CurveComplexError):
    """No witness configuration exists in the catalog for a target curve."""


class Unsupported(CurveComplexError):
    """Parameter outside the supported range."""
