"""Domain exception taxonomy.

Every error carries a stable ``code`` used by the HTTP service and mapped
to CLI exit codes.
"""


class PadeLabError(Exception):
    """Base class for all domain errors raised by this package."""

    code = "error"


class TruncationTooShort(PadeLabError):
    """A jet does not carry enough coefficients for the requested operation."""

    code = "truncation_too_short"


class DenominatorVanishesAtOrigin(PadeLabError):
    """A rational function cannot be expanded about 0 because den(0) = 0."""

    code = "denominator_vanishes_at_origin"


class PoleAtSample(PadeLabError):
    """A denominator vanishes (or is negligible) at a sample point."""

    code = "pole_at_sample"

    def __init__(self, message, point=None):
        super().__init__(message)
        self.point = point


class QZero(PadeLabError):
    """The Hankel determinant is not defined for denominator degree bound 0."""

    code = "q_zero"


class PadeDegenerate(PadeLabError):
    """The Hankel determinant vanishes: no unique Pade approximant at this index.

    ``numerically_degenerate`` distinguishes a float determinant below the
    relative threshold from an exact zero.
    """

    code = "pade_degenerate"

    def __init__(self, message, numerically_degenerate=False):
        super().__init__(message)
        self.numerically_degenerate = numerically_degenerate


class DegenerateNormalization(PadeLabError):
    """The expanded denominator has constant term zero; cannot normalize."""

    code = "degenerate_normalization"


class NoAdmissiblePerturbation(PadeLabError):
    """No candidate perturbation coefficient makes the determinant nonzero."""

    code = "no_admissible_perturbation"


class EmptySample(PadeLabError):
    """Grid sampling of a region produced no points."""

    code = "empty_sample"


class NoUsableIndex(PadeLabError):
    """No (p, q) pair in the supplied family satisfies the degree constraints."""

    code = "no_usable_index"


class StabilityBudgetExceeded(PadeLabError):
    """An iterative shrink/halving search hit its cap without succeeding."""

    code = "stability_budget_exceeded"


class TruncationDiverged(PadeLabError):
    """The partial-sum order scan hit its cap without meeting the bound."""

    code = "truncation_diverged"


class PoleIntrusion(PadeLabError):
    """A constructed witness keeps poles inside the inflated sample region."""

    code = "pole_intrusion"
