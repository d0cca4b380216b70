"""Error types shared across the toolkit."""


class CapacityError(ValueError):
    """Requested qubit count exceeds the dense-simulation or curve cap."""


class InfeasibleModelError(ValueError):
    """Hardware model cannot satisfy the time-resolution bound."""
