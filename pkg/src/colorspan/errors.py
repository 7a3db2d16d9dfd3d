"""Exception types shared across the package."""


class ColorspanError(Exception):
    """Base class for every error raised by this package."""


class InvalidInstanceError(ColorspanError, ValueError):
    """An input violates a documented precondition or format rule."""


class ParseError(InvalidInstanceError):
    """A text input failed to parse.

    Carries the 1-based line number of the offending line when one can be
    attributed, so command-line error messages point at the bad input.
    """

    def __init__(self, line: int | None, message: str):
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)


class BudgetExceededError(ColorspanError):
    """An exhaustive enumeration would exceed its state budget."""


class EquivalenceViolationError(ColorspanError):
    """Feasibility bits disagree across a reduction chain.

    The reductions preserve feasibility exactly, so this error always
    indicates an implementation bug rather than a property of the input.
    """
