"""Exception types shared across the package."""


class CiresError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(CiresError, ValueError):
    """Polynomial or input-file syntax error, with a position when known."""

    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class RingMismatchError(CiresError, ValueError):
    """Operands belong to different polynomial rings."""


class HomogeneityError(CiresError, ValueError):
    """A polynomial or matrix entry is not homogeneous of the required degree."""


class ShapeError(CiresError, ValueError):
    """Matrix dimensions or twist vectors do not line up."""


class RegularSequenceError(CiresError, ValueError):
    """The given polynomials do not form a homogeneous regular sequence."""


class OperatorExtractionError(CiresError, ValueError):
    """A lifted square did not reduce to zero against the ring relations."""


class FilterRegularSearchError(CiresError, RuntimeError):
    """No filter-regular degree-2 operator was found within the attempt budget."""


class SectionError(CiresError, RuntimeError):
    """The complexity-reduction construction failed on the requested window."""


class InputSpecError(CiresError, ValueError):
    """An input file violates the experiment schema."""
