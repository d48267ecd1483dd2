"""Exception hierarchy shared by every module in the package."""


class MatpowError(Exception):
    """Base class for all errors raised by matpow."""


class DivisionByZero(MatpowError, ZeroDivisionError):
    pass


class ZeroArgument(MatpowError, ValueError):
    pass


class InvalidModulus(MatpowError, ValueError):
    pass


class BothZero(MatpowError, ValueError):
    pass


class InvalidInput(MatpowError, ValueError):
    pass


class DimMismatch(MatpowError, ValueError):
    pass


class SingularSystem(MatpowError, ArithmeticError):
    pass


class RootFindingDiverged(MatpowError, ArithmeticError):
    pass


class MismatchDetected(MatpowError, AssertionError):
    pass


class NotStochastic(MatpowError, ValueError):
    pass


class NoLimit(MatpowError, ArithmeticError):
    pass


class ParseError(MatpowError, ValueError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f" (line {line}, column {column})"
        super().__init__(message + where)


class DimError(MatpowError, ValueError):
    pass
