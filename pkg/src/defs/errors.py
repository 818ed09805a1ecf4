from .syntax import Pos


class DefsError(Exception):
    """Base for every error that carries a source position."""

    def __init__(self, message, pos):
        super().__init__(message, pos)
        self.message = message
        self.pos = Pos(*pos)

    def __str__(self):
        return f"{self.message} at line {self.pos.line}, column {self.pos.column}"


class LexicalError(DefsError):
    pass


class ParseError(DefsError):
    def __init__(self, pos, detail=""):
        super().__init__(detail, pos)

    def __str__(self):
        text = f"parse error at line {self.pos.line}, column {self.pos.column}"
        return f"{text}: {self.message}" if self.message else text


class RunError(DefsError):
    pass
