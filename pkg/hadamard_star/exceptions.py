"""Exception hierarchy shared by every subpackage."""


class HadamardStarError(ValueError):
    """Base class for all domain errors raised by hadamard_star."""


class FieldMismatchError(HadamardStarError):
    """Two scalars from quadratic fields with different radicands were mixed."""


class FieldDivisionError(HadamardStarError, ZeroDivisionError):
    """Division by an exact zero."""


class ScalarParseError(HadamardStarError):
    """Text could not be read as an exact scalar."""


class DimensionMismatchError(HadamardStarError):
    """Shapes or ambient dimensions disagree."""


class DegenerateInputError(HadamardStarError):
    """A point or form is zero, or has a zero entry where none is allowed."""


class UndefinedHadamardProductError(HadamardStarError):
    """Every coordinatewise product of two points vanishes."""


class NotGenerallyLinearError(HadamardStarError):
    """A family of linear forms is not generally linear."""


class PreconditionError(HadamardStarError):
    """A mathematical hypothesis of an operation does not hold."""


class SchemaError(HadamardStarError):
    """A command document does not match its schema."""


class ConfigurationError(HadamardStarError):
    """A settings value has the wrong type or range."""
