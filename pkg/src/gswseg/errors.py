"""Exception types shared across the package."""


class ConfigurationError(ValueError):
    """Invalid hyperparameters or an infeasible run configuration."""


class ProblemFormatError(ValueError):
    """Malformed problem/label file; carries the offending line number."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
