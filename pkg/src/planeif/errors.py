"""Exception hierarchy shared by every module of the package."""


class PlaneIFError(Exception):
    """Base class for all errors raised by planeif."""


class InvalidRotation(PlaneIFError, ValueError):
    """A rotation system references vertices outside ``range(n)``."""


class AsymmetricRotation(InvalidRotation):
    """``u`` lists ``v`` as a neighbour but ``v`` does not list ``u``."""


class LoopOrMultiEdge(InvalidRotation):
    """A rotation contains a self loop or repeats a neighbour."""


class NonPlanarEuler(PlaneIFError, ValueError):
    """Traced faces violate ``n - m + F = 2`` on some component."""


class Disconnected(PlaneIFError, ValueError):
    """The graph has several components and was not flagged as such."""


class NonCycleBoundary(PlaneIFError, ValueError):
    """A face boundary walk is not a simple cycle."""


class NotInClass(PlaneIFError):
    """The input graph contains a forbidden cycle structure."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class PreconditionViolated(PlaneIFError):
    """Input is outside the regime an operation is defined for."""


class EulerMismatch(PlaneIFError):
    """Initial charges do not sum to -12."""


class IllegalStep(PlaneIFError):
    """A Delete/DeleteSave step would violate its legality condition."""


class NotAnEdge(IllegalStep):
    """DeleteSave was asked to spare a vertex that is not a neighbour."""


class SizeBound(PlaneIFError, ValueError):
    """An exhaustive routine was called on an input above its size bound."""


class CertificationFailed(PlaneIFError):
    """No weak 2-degeneracy certificate could be assembled."""


class PartitionFailed(PlaneIFError):
    """No (I, F)-partition could be assembled constructively."""


class UnknownFamily(PlaneIFError, ValueError):
    """``generate_family`` was asked for a family it does not know."""
