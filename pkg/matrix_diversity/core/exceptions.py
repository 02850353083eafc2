class MatrixDiversityError(Exception):
    pass


class SizingError(MatrixDiversityError, ValueError):
    pass


class DomainError(MatrixDiversityError, ValueError):
    def __init__(self, message: str, hypothesis: str | None = None):
        super().__init__(message)
        self.hypothesis = hypothesis


class UnsupportedCombinationError(DomainError):
    pass


class NumericError(MatrixDiversityError, ArithmeticError):
    def __init__(self, message: str, attempts: int | None = None):
        super().__init__(message)
        self.attempts = attempts


class DivergenceError(NumericError):
    def __init__(self, message: str, step: int):
        super().__init__(message)
        self.step = step


class ConfigError(MatrixDiversityError, ValueError):
    def __init__(self, message: str, key: str | None = None):
        super().__init__(message)
        self.key = key
