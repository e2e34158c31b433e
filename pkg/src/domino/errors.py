"""Exception hierarchy shared by every module."""


class DominoError(Exception):
    """Base class for all errors raised by this package."""


class SequenceError(DominoError, ValueError):
    """An arrival sequence or instance file is malformed."""


class NotAlwaysConnectedError(DominoError, ValueError):
    """An operation that needs an always-connected sequence got something else."""


class ParameterError(DominoError, ValueError):
    """A family generator or config received parameters outside its constraints."""


class PreconditionError(DominoError, ValueError):
    """A transformation input does not satisfy its precondition."""


class CapExceededError(DominoError):
    """The exact solver refuses an instance larger than its configured cap."""


class PolicyContractError(DominoError):
    """An online policy returned a vertex that has not arrived yet."""


class FeasibilityError(DominoError):
    """An online run left D_i infeasible for G_i."""

    def __init__(self, message: str, step: int):
        super().__init__(message)
        self.step = step


class ConfigError(DominoError, ValueError):
    """An experiment config or CLI argument combination is invalid."""
