from typing import Any, Optional


class ChordWeightError(Exception):
    """Base class of every error raised by the chordweight apps"""


class ChordValidationError(ChordWeightError):
    """An input violates an invariant; `witness` names the offending part"""

    def __init__(self, message: str, witness: Optional[Any] = None):
        super().__init__(message)
        self.witness = witness

    def __str__(self):
        message = super().__str__()
        if self.witness is None:
            return "{name}: {message}".format(name=type(self).__name__, message=message)
        return "{name}: {message} (witness: {witness})".format(name=type(self).__name__, message=message, witness=self.witness)


class NotABijection(ChordValidationError):
    pass


class DanglingLabel(ChordValidationError):
    pass


class LabelMismatch(ChordValidationError):
    pass


class NotSymmetric(ChordValidationError):
    pass


class Singular(ChordValidationError):
    pass


class ShapeMismatch(ChordValidationError):
    pass


class NotAntisymmetric(ChordValidationError):
    pass


class JacobiFails(ChordValidationError):
    pass


class NotSymmetricForm(ChordValidationError):
    pass


class Degenerate(ChordValidationError):
    pass


class NotAdInvariant(ChordValidationError):
    pass


class NotARepresentation(ChordValidationError):
    pass


class NotBracketClosed(ChordValidationError):
    pass


class UnknownName(ChordValidationError):
    pass


class SizeBound(ChordWeightError):
    """A request would exceed one of the configured factorial size guards"""

    def __init__(self, message: str, requested: int, bound: int):
        super().__init__("{message} (requested {requested}, bound {bound})".format(message=message, requested=requested, bound=bound))
        self.requested = requested
        self.bound = bound


class DocumentParseError(ChordWeightError):
    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None, field: Optional[str] = None):
        if line is not None:
            message = "{message} at line {line} column {column}".format(message=message, line=line, column=column)
        if field is not None:
            message = "{message} at field {field}".format(message=message, field=field)
        super().__init__(message)
        self.line = line
        self.column = column
        self.field = field


class UsageError(ChordWeightError):
    """A size or count argument outside its range"""
