"""Exception types shared across the toolkit."""


class FuskitError(Exception):
    """Base class for all toolkit errors."""


class FieldMismatch(FuskitError):
    """Arithmetic between quadratic numbers living in different fields Q(sqrt n)."""


class ConvergenceFailure(FuskitError):
    """Eigenvalue iteration hit its cap without converging."""


class SizeLimit(FuskitError):
    """Input exceeds the supported desk-scale bound."""


class UnknownElement(FuskitError):
    """An element label is not part of the group it was used with."""


class NotNormal(FuskitError):
    """Quotient requested by a non-normal subgroup."""


class GradingInconsistency(FuskitError):
    """The induced product on grading components is not well-defined."""


class PointedInput(FuskitError):
    """A detector that needs non-invertible simples was fed a pointed ring."""


class TypeExtractionFailure(FuskitError):
    """Non-invertible simples disagree on their self-decomposition."""


class DetectorDisagreement(FuskitError):
    """Two independent characterizations of the same property disagree."""


class NotFibExtension(FuskitError):
    """The ring's trivial grading component is not a Fibonacci ring."""


class NotAssociative(FuskitError):
    """A family constructor produced constants that fail validation."""


class NotClosed(FuskitError):
    """A basis subset is not closed under products and duals."""


class NotPointedPrecondition(FuskitError):
    """An operation requiring a non-pointed subring received a pointed one."""


class UnsupportedNonabelian(FuskitError):
    """Construction is only defined over abelian groups."""


class FamilyAssertionFailure(FuskitError):
    """A family constructor's post-construction invariant failed."""
