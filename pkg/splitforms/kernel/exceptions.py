class SplitFormsException(Exception):
    pass


class DimensionMismatchException(SplitFormsException):
    pass


class DegreeMismatchException(SplitFormsException):
    pass


class RationalDivisionByZeroException(SplitFormsException, ZeroDivisionError):
    pass


class PoleException(SplitFormsException):
    pass


class NonPolynomialCoefficientException(SplitFormsException):
    pass


class NotClosedException(SplitFormsException):
    pass


class NotDivergenceFreeException(SplitFormsException):
    pass


class WitnessVerificationException(SplitFormsException):
    pass


class ExpressionSyntaxException(SplitFormsException):

    def __init__(self, message, line=1, column=1):
        # type: (str, int, int) -> None
        self.line = line
        self.column = column
        super(ExpressionSyntaxException, self).__init__(u"{}:{}: {}".format(line, column, message))


class UnknownVariableException(ExpressionSyntaxException):
    pass


class TypeMismatchException(ExpressionSyntaxException):
    pass


class PartitionException(SplitFormsException):
    pass
