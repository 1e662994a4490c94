"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument violates a documented precondition."""


class PoleError(DomainError):
    """Evaluation was requested exactly at a pole."""
