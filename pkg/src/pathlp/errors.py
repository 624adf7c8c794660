"""Exception types raised by the solver pipeline."""


class PathLPError(Exception):
    """Base class for all solver errors."""


class ContractViolation(PathLPError, ValueError):
    """A caller broke a documented precondition."""


class InfeasibleRow(PathLPError):
    """Elimination reduced a row to ``0 = beta`` with ``beta != 0``."""

    def __init__(self, row, residual):
        super().__init__(f"row {row} reduces to 0 = {residual:.6g}; constraints are inconsistent")
        self.row = row
        self.residual = residual


class NonPositiveScaling(ContractViolation):
    pass


class NonPositiveMu(ContractViolation):
    pass


class BadMu(ContractViolation):
    pass


class IllConditioned(PathLPError):
    """Symmetric factorization hit a pivot below the relative threshold."""


class InvariantViolation(PathLPError):
    """An iterate left the neighbourhood the method is supposed to keep."""


class BoundOverflow(PathLPError, OverflowError):
    """A log-space bound does not fit in a double."""


class TooLarge(PathLPError):
    """Problem exceeds the brute-force enumeration guard."""


class ParseError(PathLPError, ValueError):
    pass
