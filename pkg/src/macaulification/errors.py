"""Exception types shared across the package."""
from __future__ import annotations


class ValidationError(ValueError):
    """Input data violates a structural invariant.

    ``condition`` names the violated invariant; ``detail`` points at the
    offending entry when there is one.
    """

    def __init__(self, condition: str, detail: object = None, message: str | None = None):
        self.condition = condition
        self.detail = detail
        if message is None:
            message = condition if detail is None else f"{condition}: {detail}"
        super().__init__(message)


class DefectError(RuntimeError):
    """An internal cross-check failed (two computations that must agree did not)."""
