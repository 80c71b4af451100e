"""Exception types shared across the package."""


class InvalidParameterError(ValueError):
    """A parameter violates its documented constraint."""


class ContractViolationError(RuntimeError):
    """An input or result violates a numerical contract (e.g. non-Hermitian matrix)."""


class UnsupportedRangeError(ValueError):
    """An argument is outside the supported numerical range."""


class InvalidFieldError(ValueError):
    """A field map is unusable (zero norm, bad shape, negative weight)."""


class ConfigError(ValueError):
    """Config file problem, with line/key context where available."""

    def __init__(self, message, line=None, key=None):
        ctx = []
        if line is not None:
            ctx.append(f"line {line}")
        if key is not None:
            ctx.append(f"key '{key}'")
        if ctx:
            message = f"{message} ({', '.join(ctx)})"
        super().__init__(message)
        self.line = line
        self.key = key
