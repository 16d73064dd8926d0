from typing import Optional


class TrimerError(Exception):
    """Base class for every error raised by the trimer library."""


class ConfigError(TrimerError, ValueError):
    pass


class DataError(TrimerError, ValueError):
    def __init__(self, message: str, line: Optional[int] = None) -> None:
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class SymmetryError(TrimerError, ArithmeticError):
    pass


class NotHermitianError(TrimerError, ValueError):
    pass
