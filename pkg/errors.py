class EquidissectError(Exception):
    """Base error; `code` is the stable identifier used in reports and exit codes"""

    code = "ERROR"

    def __init__(self, message=""):
        super().__init__(message or self.code)
        self.message = message or self.code

    def to_json(self):
        return {"code": self.code, "detail": self.message}


class ZeroDenominator(EquidissectError):
    code = "ZERO_DENOMINATOR"


class DivideByZero(EquidissectError, ZeroDivisionError):
    code = "DIVIDE_BY_ZERO"


class NegativeRadicand(EquidissectError):
    code = "NEGATIVE_RADICAND"


class FieldMismatch(EquidissectError):
    code = "FIELD_MISMATCH"


class ParamOutOfRange(EquidissectError):
    code = "PARAM_OUT_OF_RANGE"


class BadHypotheses(EquidissectError):
    code = "BAD_HYPOTHESES"


class PolygonMismatch(EquidissectError):
    code = "POLYGON_MISMATCH"


class NotCommensurable(EquidissectError):
    code = "NOT_COMMENSURABLE"


class BadPolygon(EquidissectError):
    code = "BAD_POLYGON"


class MalformedInput(EquidissectError):
    code = "MALFORMED_INPUT"


class NotATiling(EquidissectError):
    code = "NOT_A_TILING"
