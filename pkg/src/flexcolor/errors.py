class InputError(ValueError):
    """Raised for malformed or out-of-range inputs."""


class ParseError(InputError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class UncolorableError(RuntimeError):
    """No L-coloring exists where one was required."""


class HypothesisViolated(RuntimeError):
    """No reducible subgraph was found within the search budget."""

    def __init__(self, message: str, budget: dict | None = None):
        self.budget = budget or {}
        super().__init__(message)


class InternalConsistencyError(RuntimeError):
    pass
