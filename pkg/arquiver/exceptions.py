"""
Exceptions raised by arquiver.

Every error derives from `ArquiverError`, itself a `ValueError`, so callers can
catch either.
"""

__all__ = [
    "AlgebraMismatch",
    "AmbiguousAtBoundary",
    "ArquiverError",
    "BoundaryTooTight",
    "DimensionMismatch",
    "GammaHatInfinite",
    "GrammarViolation",
    "InfiniteGlobalDimensionWithinCap",
    "InvalidRepresentation",
    "InvalidTranslationQuiver",
    "MalformedRelation",
    "NotAMultisection",
    "NotAdmissible",
    "NotTriangular",
    "ParseError",
    "ResolutionCapExceeded",
    "ScriptError",
    "ShapeMismatch",
    "SharedSubpathMissing",
    "SingularCartan",
]


class ArquiverError(ValueError):
    """Base class of all arquiver errors."""


class ParseError(ArquiverError):
    """A text file could not be parsed."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class MalformedRelation(ArquiverError):
    """A relation is not a combination of parallel paths of length at least two."""


class NotAdmissible(ArquiverError):
    """Some path of maximal enumerated length survives the reduction."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class InvalidRepresentation(ArquiverError):
    """Matrices do not fit the dimension vector or violate a relation."""

    def __init__(self, message, relation=None):
        super().__init__(message)
        self.relation = relation


class AlgebraMismatch(ArquiverError):
    """Two modules live over different algebras."""


class NotTriangular(ArquiverError):
    """The quiver of the algebra has an oriented cycle."""


class InfiniteGlobalDimensionWithinCap(ArquiverError):
    """A projective resolution did not terminate within the configured cap."""


class SingularCartan(ArquiverError):
    """The Cartan matrix is not invertible."""


class ResolutionCapExceeded(ArquiverError):
    """An Ext group beyond the computed resolution range was requested."""


class InvalidTranslationQuiver(ArquiverError):
    """A translation quiver is structurally inconsistent."""


class ShapeMismatch(ArquiverError):
    """The support shape at the pivot does not fit the requested operation."""


class BoundaryTooTight(ArquiverError):
    """The truncation window cannot host the inserted vertices."""


class GammaHatInfinite(ArquiverError):
    """The part split off before an operation is not finite within the window."""


class AmbiguousAtBoundary(ArquiverError):
    """The support shape is decided only beyond the truncation frontier."""


class GrammarViolation(ArquiverError):
    """A composite operation does not follow the allowed sequence of steps."""


class SharedSubpathMissing(ArquiverError):
    """The rays of the new projectives do not share a boundary-reaching part."""


class NotAMultisection(ArquiverError):
    """A vertex set violates one of the multisection axioms."""

    def __init__(self, message, axiom=None):
        super().__init__(message)
        self.axiom = axiom


class DimensionMismatch(ArquiverError):
    """Two modules that should share a dimension vector do not."""


class ScriptError(ArquiverError):
    """An operation script failed at a given step."""

    def __init__(self, message, step=None, cause=None):
        if step is not None:
            message = f"step {step}: {message}"
        super().__init__(message)
        self.step = step
        self.cause = cause
