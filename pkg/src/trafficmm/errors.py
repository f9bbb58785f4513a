class ValidationError(ValueError):
    """Input violates a documented precondition."""


class ParseError(ValidationError):
    def __init__(self, message: str, path=None, line: int | None = None):
        where = ""
        if path is not None:
            where = f"{path}:{line}: " if line is not None else f"{path}: "
        super().__init__(where + message)
        self.path = path
        self.line = line


class TrainingDiverged(RuntimeError):
    """Raised when a loss becomes non-finite; ``dump_path`` points at the saved state."""

    def __init__(self, message: str, dump_path=None):
        super().__init__(message if dump_path is None else f"{message} (state dumped to {dump_path})")
        self.dump_path = dump_path
