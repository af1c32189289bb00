"""Exception types shared across frobex."""


class FrobexError(Exception):
    """Base class for library errors."""


class FieldMismatchError(FrobexError):
    """Operands live in different cyclotomic fields."""


class CapacityError(FrobexError):
    """A size, conductor or search budget limit was exceeded."""


class ShapeError(FrobexError):
    """Matrix or vector dimensions do not fit together."""


class FrobexParseError(FrobexError):
    """Text could not be parsed; carries the offending position."""

    def __init__(self, message, text="", position=0):
        self.message = message
        self.text = text
        self.position = position
        lo = max(0, position - 20)
        snippet = text[lo:position + 20]
        super().__init__(f"{message} at position {position}: {snippet!r}")


class PreconditionError(FrobexError):
    """Input data does not satisfy a documented precondition."""


class NotSeparableError(PreconditionError):
    """m . Delta is not the identity."""


class CounitError(PreconditionError):
    """No counit, or more than one, solves counitality."""


class HypothesisMismatch(PreconditionError):
    """An identity required as input fails; both sides are kept."""

    def __init__(self, message, lhs, rhs):
        self.lhs = lhs
        self.rhs = rhs
        super().__init__(f"{message}: lhs={lhs} rhs={rhs}")
