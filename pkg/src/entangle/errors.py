"""Exception types shared across the package.

The CLI maps these onto exit codes: ``InputError`` -> 2, ``CapExceeded`` -> 3,
``TheoremViolation`` -> 1.
"""


class InputError(ValueError):
    """Malformed or out-of-contract input data."""


class ContractError(ValueError):
    """An operation was called outside its precondition."""


class CapExceeded(RuntimeError):
    """A configured resource limit was hit during exhaustive work."""

    def __init__(self, what: str, limit: int, got: int | None = None):
        self.what = what
        self.limit = limit
        self.got = got
        msg = f"{what} exceeds cap {limit}"
        if got is not None:
            msg += f" (got {got})"
        super().__init__(msg)


class TheoremViolation(AssertionError):
    """A property that is proven to hold failed; ``witness`` re-verifies it."""

    def __init__(self, message: str, witness: dict):
        super().__init__(message)
        self.witness = witness
