class ValidatorError(ExceptionGroup):
    """A value failed one or more checks; every failed check is carried as a sub-exception."""


class DimensionError(ValueError):
    pass


class PreconditionError(ValueError):
    pass


class RootFindingError(ArithmeticError):
    """The scalar multiplier equation could not be solved to the requested accuracy."""


class BracketError(RootFindingError):
    pass
