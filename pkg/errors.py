class ProblemError(ValueError):
    """A utility matrix or allocation that violates the problem invariants."""


class LpInputError(ValueError):
    """A linear program whose dimensions or bounds are malformed."""


class NotPositiveError(ValueError): ...


class NotNegativeError(ValueError): ...


class NotNullError(ValueError): ...


class NonNegativeComponentError(ValueError):
    """Raised when a criticality test receives a profile with some U_i >= 0."""


class PriceSignError(ValueError):
    """Prices violate the sign pattern: positive on goods, negative on bads, zero on neutral items."""


class DegenerateAgentError(ValueError):
    """An agent whose maximal utility equals the fair share of that agent."""


class NonPlottableError(ValueError): ...


class CoalitionLimitError(ValueError): ...


class ProblemFileError(ValueError):
    def __init__(self, path: str, message: str, line: int | None = None):
        """
        Error raised while reading a JSON problem, division or sweep document.

        Args:
            path (str): The file the document was read from.
            message (str): What is wrong with the document.
            line (int | None, optional): Line number of a syntax error. Defaults to None.
        """
        self.path = path
        self.line = line
        location = f"{path}:{line}" if line is not None else path
        super().__init__(f"{location}: {message}")
