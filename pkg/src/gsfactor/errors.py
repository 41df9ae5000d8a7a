"""Exception types shared across the package.

DomainError covers bad inputs: failed preconditions, out-of-range guards,
unsupported constructions.  InvariantError marks an internal mathematical
cross-check that failed; it should never fire on valid inputs and always
indicates a bug.
"""


class DomainError(ValueError):
    """An argument violates a documented precondition or guard."""


class InvariantError(RuntimeError):
    """An internal identity that must hold unconditionally did not."""
