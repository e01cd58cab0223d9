class NotPrime(ValueError):
    """Raised when a prime was required and the argument is not one."""


class DomainError(ValueError):
    """Raised when an argument lies outside the domain of a formula."""


class IntegerOverflow(OverflowError):
    """Raised when an exact result exceeds the caller's bit budget."""
