"""Exception hierarchy shared by every package."""


class SgfbError(Exception):
    """Base class for all filter bank library errors."""

    pass


class GraphError(SgfbError):
    """Raised for invalid graph construction or reduction."""

    pass


class SpectralError(SgfbError):
    """Raised when an eigendecomposition cannot be trusted."""

    pass


class FilterBankError(SgfbError):
    """Raised for kernel design and reconstruction failures."""

    pass


class ExperimentError(SgfbError):
    """Raised for invalid experiment inputs."""

    pass


class OddVertexCount(SgfbError, ValueError):
    """Raised when an operation needs an even number of vertices."""

    pass


class LengthMismatch(SgfbError, ValueError):
    """Raised when a signal does not match the size of its operator."""

    pass


class SelfLoop(GraphError, ValueError):
    pass


class IndexOutOfRange(GraphError, ValueError):
    pass


class NegativeWeight(GraphError, ValueError):
    pass


class DuplicateEdge(GraphError, ValueError):
    pass


class ZeroDegreeVertex(GraphError, ValueError):
    """Raised when a normalized Laplacian is requested with an isolated vertex."""

    pass


class ConnectivityFailure(GraphError):
    """Raised when a random generator cannot produce a connected graph."""

    pass


class SingularInteriorBlock(GraphError):
    """Raised when the eliminated block of a Kron reduction is singular."""

    pass


class EmptyKeepSet(GraphError, ValueError):
    pass


class NotSymmetric(SpectralError, ValueError):
    pass


class ConvergenceFailure(SpectralError):
    pass


class CutoffOutOfRange(FilterBankError, ValueError):
    pass


class PRViolation(FilterBankError, ValueError):
    """Raised when a kernel design breaks the perfect reconstruction condition."""

    pass


class SingularSynthesis(FilterBankError):
    """Raised when the spectral combine matrix cannot be inverted."""

    pass


class SingularVertexSynthesis(FilterBankError):
    """Raised when the vertex-domain synthesis matrix is numerically singular."""

    pass


class ZeroReference(ExperimentError, ValueError):
    pass


class FractionOutOfRange(ExperimentError, ValueError):
    pass
