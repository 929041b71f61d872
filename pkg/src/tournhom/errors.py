"""Shared exception types."""


class BudgetExceededError(RuntimeError):
    """An exact search or enumeration exceeded its node/leaf budget."""


class EnumerationCapError(RuntimeError):
    """An enumeration produced more homomorphisms than the requested cap."""


class DegenerateHostError(ValueError):
    """The 4-necklace density vanishes, so the (x, y) statistics are undefined."""


class SamplingError(RuntimeError):
    """A randomized sampler exhausted its tries without a success."""
