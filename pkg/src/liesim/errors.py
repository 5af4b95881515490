"""Exception types shared across the toolkit."""


class LiesimError(Exception):
    """Base class for toolkit errors."""


class DimensionCapError(LiesimError):
    """Requested Hilbert-space dimension exceeds the configured cap."""


class DomainError(LiesimError):
    """Phase-space point lies outside the chart of a coherent family."""


class LeakageError(LiesimError):
    """Truncated-basis population monitor exceeded its threshold."""

    def __init__(self, leakage, threshold, where=""):
        self.leakage = float(leakage)
        self.threshold = float(threshold)
        super().__init__(
            f"leakage {leakage:.3e} exceeds threshold {threshold:.3e}"
            + (f" ({where})" if where else "")
        )


class NumericalError(LiesimError):
    """A propagation or integration accuracy guard failed."""


class ConfigError(LiesimError):
    """Experiment configuration is malformed or inconsistent."""
