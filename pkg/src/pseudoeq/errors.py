"""Exception hierarchy shared by every module of the package."""


class AlgebraError(Exception):
    """Base class for all errors raised by pseudoeq."""


class DuplicateElement(AlgebraError):
    pass


class BadTableShape(AlgebraError):
    pass


class UnknownToken(AlgebraError):
    def __init__(self, token, line=None):
        self.token = token
        self.line = line
        where = f" (line {line})" if line is not None else ""
        super().__init__(f"unknown token {token!r}{where}")


class NotASemilattice(AlgebraError):
    def __init__(self, message, witness=None):
        self.witness = witness
        super().__init__(message)


class TopNotGreatest(AlgebraError):
    def __init__(self, message, witness=None):
        self.witness = witness
        super().__init__(message)


class SizeBoundExceeded(AlgebraError):
    pass


class PreconditionPCFailed(AlgebraError):
    def __init__(self, message, witness=None):
        self.witness = witness
        super().__init__(message)


class MeetIllDefined(AlgebraError):
    def __init__(self, message, witness=None):
        self.witness = witness
        super().__init__(message)


class NotNormal(AlgebraError):
    pass


class NotCompatible(AlgebraError):
    pass


class NotAMorphismOnReg(AlgebraError):
    pass


class NotAMorphism(AlgebraError):
    pass


class PointNotFixed(AlgebraError):
    pass


class PointIsTop(AlgebraError):
    pass


class BadLength(AlgebraError):
    pass


class OutOfBox(AlgebraError):
    pass


class UnknownClaim(AlgebraError):
    pass


def _where(line, column) -> str:
    if line is None:
        return ""
    return f"line {line}" + (f", column {column}" if column is not None else "") + ": "


class DocumentError(AlgebraError):
    """Malformed input document; carries the 1-based line and column."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        super().__init__(_where(line, column) + message)


class DocumentSyntaxError(DocumentError):
    pass


class ShapeError(DocumentError):
    pass


class DocumentTokenError(DocumentError, UnknownToken):
    def __init__(self, token, line=None, column=None):
        # skip UnknownToken.__init__, which would re-wrap the message
        AlgebraError.__init__(self, _where(line, column) + f"unknown token {token!r}")
        self.token = token
        self.line = line
        self.column = column
