"""Exception types shared across the package."""


class DomainError(ValueError):
    """Input parameters outside the domain of an operation."""


class RegimeError(DomainError):
    """Operation called in the wrong degree regime."""


class InadmissibleError(ValueError):
    """A gamma sequence violates its constraint profile."""


class BudgetExceededError(RuntimeError):
    """Oracle enumeration ran past its node budget."""
