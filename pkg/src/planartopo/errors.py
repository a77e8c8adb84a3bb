"""Exception hierarchy shared by every subpackage."""


class PlanarTopoError(Exception):
    """Base class for all package errors."""


class InputError(PlanarTopoError):
    """Malformed scene document or mask file.

    ``path`` is a JSON-pointer-like location of the offending field.
    """

    def __init__(self, message: str, path: str = ""):
        self.path = path
        super().__init__(f"{path}: {message}" if path else message)


class GeometryError(PlanarTopoError):
    """A primitive violates its geometric invariants."""


class FrameError(PlanarTopoError):
    """A frame is malformed or too small for the scene it hosts."""


class DomainError(PlanarTopoError):
    """An operation was called outside its domain.

    ``certificate`` optionally carries the certificate whose failure caused it.
    """

    def __init__(self, message: str, certificate=None):
        self.certificate = certificate
        super().__init__(message)


class DisjointnessError(DomainError):
    """Two sets that must be disjoint touch or overlap."""


class NoPathError(DomainError):
    """No complement path joins the requested points."""


class DegeneratePositionError(DomainError):
    """A query point lies on a curve."""


class PreconditionError(DomainError):
    """A certified precondition of a construction does not hold."""


class UndecidedError(PlanarTopoError):
    """Resolution floor reached without a decided certificate."""


class GenerationError(PlanarTopoError):
    """Random instance generation exhausted its retries."""


class InternalInvariantError(PlanarTopoError):
    """An invariant that must be impossible to break was broken (a defect)."""
