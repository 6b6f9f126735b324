"""Exception types shared across the package."""


class DomainError(ValueError):
    """A parameter lies outside the mathematical domain of an operation."""


class DivergenceError(DomainError):
    """The requested series does not converge for the given parameters."""


class NonAlternatingError(ValueError):
    """Series acceleration was asked to sum terms that do not alternate."""


class IllConditionedFitError(ValueError):
    """A least-squares tail fit is too ill-conditioned to trust."""
