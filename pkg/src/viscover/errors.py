"""Exception types shared across the package."""


class ViscoverError(Exception):
    """Base class for all library errors."""


class ParseError(ViscoverError):
    """Scene file is malformed."""


class ValidationError(ViscoverError):
    """Scene violates the standing assumptions (disjointness, enclosure).

    Carries the offending segment ids in ``segment_ids`` when known.
    """

    def __init__(self, message, segment_ids=()):
        super().__init__(message)
        self.segment_ids = tuple(segment_ids)


class GenerationFailure(ViscoverError):
    """Random scene generation exhausted its retry budget."""


class DegenerateInput(ViscoverError):
    """Generator input is too small or degenerate to build the gadget."""


class PointOnSegment(ViscoverError):
    """Query point lies on a scene segment; the query is undefined there."""


class UnknownSegment(ViscoverError):
    """Segment id does not exist in the scene."""


class VerticalLine(ViscoverError):
    """A bounding line is vertical, so the point-line duality does not apply."""


class BadParameter(ViscoverError):
    """Parameter outside its documented range."""


class PreconditionViolated(ViscoverError):
    """Caller broke an operation precondition (e.g. query points not visible)."""
