"""Error types shared across the library.

Every error that can reach a user through the CLI derives from GalcovError
and carries a stable ``code`` identifier, so reports and exit codes stay
deterministic.
"""

from __future__ import annotations


class GalcovError(Exception):
    code = "error"


class ConfigError(GalcovError):
    """Malformed input document; ``path`` points at the offending field."""

    code = "config"

    def __init__(self, message, path=""):
        self.path = path
        super().__init__(f"{path}: {message}" if path else message)


class NonIntegralInvariant(GalcovError):
    """Some t-invariant is fractional: no cover with this branch data exists."""

    code = "non-integral-invariant"

    def __init__(self, character=None, detail=""):
        self.character = character
        msg = "branch data admits no cover"
        if character is not None:
            msg += f" (fractional invariant at character {character})"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)


class DegenerateCover(GalcovError):
    """A nontrivial character has vanishing t: the fibered product is reducible."""

    code = "degenerate-cover"

    def __init__(self, character):
        self.character = character
        super().__init__(f"degenerate cover: t vanishes at nontrivial character {character}")


class BranchedAtInfinity(GalcovError):
    code = "branched-at-infinity"


class NonInvariantInput(GalcovError):
    code = "non-invariant-input"


class UnsupportedBaseGenus(GalcovError):
    code = "unsupported-base-genus"


class NotAbelian(GalcovError):
    code = "not-abelian"


class SearchSpaceTooLarge(GalcovError):
    code = "search-space-too-large"

    def __init__(self, size, cap):
        self.size = size
        self.cap = cap
        super().__init__(f"enumeration of size {size} is above the cap {cap}")


class AdmissibilityViolation(GalcovError):
    code = "admissibility"

    def __init__(self, genus, q):
        super().__init__(
            f"(genus, q) = ({genus}, {q}) is outside the validity window "
            "(genus >= 2 with q >= 1, genus = 1 with any q, or genus = 0 with q <= 1)"
        )


class IdentityElement(GalcovError):
    code = "identity-element"


class NTableMismatch(GalcovError):
    code = "n-table-mismatch"


class NonIntegralDimension(GalcovError):
    code = "non-integral-dimension"


class InternalInconsistency(GalcovError):
    code = "internal-inconsistency"
