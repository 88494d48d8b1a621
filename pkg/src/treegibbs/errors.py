class TreeGibbsError(Exception):
    """Base class for package errors."""


class BudgetExceededError(TreeGibbsError):
    """An enumeration or tabulation would exceed its configured budget."""


class DivergenceError(TreeGibbsError):
    """A geometric series needed for a closed-form constant diverges."""


class ConfigError(TreeGibbsError):
    """Invalid experiment configuration or operation input."""
