"""Contains various exceptions used in meshforge."""


class MeshforgeException(Exception):
    """Base exception class"""


class MeshforgeTypeError(MeshforgeException, TypeError):
    """Raised when an argument is the wrong type."""


class MeshforgeValueError(MeshforgeException, ValueError):
    """Raised when an argument has an inappropriate value (but the right type)."""


class MissingEnvVarError(MeshforgeException, RuntimeError):
    """Environment variable is missing."""


class ConfigError(MeshforgeException, ValueError):
    """Invalid suite configuration."""


class SuiteError(MeshforgeException):
    """Error while running the verification suite."""


class UsageError(MeshforgeException, ValueError):
    """Command-line arguments that parse but do not fit together."""


# -- quivers -- #


class QuiverError(MeshforgeException):
    """Error building or reading a quiver."""


class QuiverSyntaxError(QuiverError, ValueError):
    """Quiver or element text could not be parsed."""


class UndeclaredVertexError(QuiverError, ValueError):
    """An arrow endpoint or map entry names a vertex that was never declared."""


class DuplicateIdError(QuiverError, ValueError):
    """A vertex or arrow id is declared twice."""


class UnsupportedFormatError(QuiverError, ValueError):
    """Requested export format is not supported."""


class InvalidDynkinIndexError(QuiverError, ValueError):
    """The (family, index) pair is not a simply-laced Dynkin type."""


# -- path algebras -- #


class PathAlgebraError(MeshforgeException):
    """Error in truncated path algebra arithmetic."""


class BoundMismatchError(PathAlgebraError, ValueError):
    """Operands carry different word-length bounds."""


class QuiverMismatchError(PathAlgebraError, ValueError):
    """Operands live over different quivers."""


class BoundTooSmallError(PathAlgebraError, ValueError):
    """Truncation bound is too small for the requested computation."""


class NotStabilizedError(PathAlgebraError):
    """A truncated computation did not stabilize where stabilization is required."""


class OutOfMemoryBudgetError(PathAlgebraError, RuntimeError):
    """The word space exceeds the configured budget."""


class EmptyIdempotentError(PathAlgebraError, ValueError):
    """An idempotent was requested on an empty set of vertices."""


class RelationError(PathAlgebraError, ValueError):
    """A relation is not homogeneous in its endpoints or is too short."""


# -- complexes -- #


class ComplexError(MeshforgeException):
    """Error using a Complex."""


class NotAComplexError(ComplexError, ValueError):
    """Consecutive differentials do not compose to zero."""


# -- dg algebras -- #


class DgPresentationError(MeshforgeException):
    """Error building or using a dg presentation."""


class MeshUndefinedError(DgPresentationError, ValueError):
    """The mesh at a vertex is undefined because tau inverse is missing there."""


class PairingMissingError(DgPresentationError, ValueError):
    """An arrow needed for a mesh relation has no sigma partner."""


class NotStableError(DgPresentationError, ValueError):
    """The translation quiver has projective vertices or a partial tau."""


class ValidationFailedError(DgPresentationError, ValueError):
    """The translation quiver violates its structural laws."""


class IncompatibleEndpointsError(DgPresentationError, ValueError):
    """A perturbation term does not run between the right vertices."""


class NonUnitScalarError(DgPresentationError, ValueError):
    """A perturbation rescales a generator by zero."""


# -- homology -- #


class HomologyError(MeshforgeException):
    """Error computing resolutions or Ext tables."""


class ProjectiveVertexError(HomologyError, ValueError):
    """The vertex is projective, so there is no mesh resolution."""


class MissingMiddleTermsError(HomologyError, ValueError):
    """Depth above one needs middle terms supplied by the fixture."""


# -- koszul duality -- #


class KoszulError(MeshforgeException):
    """Error in the dual bar construction."""


class NotAugmentedError(KoszulError, ValueError):
    """The algebra does not split as K plus an ideal."""


class InfiniteDimensionalError(KoszulError, ValueError):
    """The algebra was not computed to a stable finite dimension."""
