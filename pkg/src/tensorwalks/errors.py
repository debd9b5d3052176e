"""Exception types shared across the package."""


class SpecError(ValueError):
    """Group/module spec string failed to parse or has invalid parameters.

    `position` is the byte offset into the input where the problem was found,
    or None for semantic errors without a useful location.
    """

    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} (at offset {position})"
        super().__init__(message)


class UnsupportedQueryError(ValueError):
    """Query not available for this group tier / module combination."""


class ConsistencyError(AssertionError):
    """Two routes that must agree exactly did not, or an exactness assertion
    failed (e.g. a character sum that must be a nonnegative integer is not).
    Always a bug in tables or formulas, never ignorable."""
