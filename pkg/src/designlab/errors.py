"""Exception types shared across the package."""


class SizeGuardError(ValueError):
    """A requested computation exceeds a desk-scale dimension guard."""


class VerificationError(RuntimeError):
    """An internal cross-check failed (dual-path disagreement, broken invariant)."""
