"""Exception types shared across the package."""


class CapExceededError(RuntimeError):
    """A size cap or enumeration budget would be exceeded."""


class OracleMismatchError(AssertionError):
    """A closed-form result disagrees with its brute-force check."""
