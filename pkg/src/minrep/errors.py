"""Exception hierarchy.

Every error raised by this package derives from MinrepError, which itself
derives from ValueError so that casual callers can catch a single class.
"""


class MinrepError(ValueError):
    """Base class for all contract violations raised by minrep."""


class OutOfRange(MinrepError):
    """An integer argument lies outside its permitted range."""


class NotCoprime(MinrepError):
    """The pair (p, q) has a common factor."""


class BothEven(NotCoprime):
    """Both members of (p, q) are even, the evenness special case of
    NotCoprime (they always share the factor 2)."""


class NoOddRepresentative(MinrepError):
    """Neither Kac representative has odd first index (impossible for odd p)."""


class NonCanonicalLabel(MinrepError):
    """The operation needs a canonical acting label, with m and n both odd."""


class NotAdmissible(MinrepError):
    """The triple of Kac labels violates the fusion admissibility rules."""


class NotPrimeCase(MinrepError):
    """Closed forms apply only when the representation dimension is 1 or prime."""


class OutOfScopeDimension(MinrepError):
    """Minimal weight data is only computed for dimension at most 3."""


class IrreducibilityUnknown(MinrepError):
    """The requested quantity needs a positive irreducibility certificate."""


class SubsetBlowup(MinrepError):
    """The subset enumeration exceeds the configured dimension cap."""


class NotPrime(MinrepError):
    """A prime number was required."""


class HypothesisNotMet(MinrepError):
    """The valuation lemma hypotheses fail for the given prime and label."""


class DimensionTooLarge(MinrepError):
    """Low-dimension classification applies only for dimension at most 3."""


class InvalidCase(MinrepError):
    """Unknown dimension-case tag for the ratio windows."""


class NotLowDimCase(MinrepError):
    """The label does not match one of the classified low-dimension shapes."""


class OddIndex(MinrepError):
    """Bernoulli numbers are exposed only at even index here."""


class OddWeight(MinrepError):
    """Eisenstein series exist in even weight only."""


class ExponentMismatch(MinrepError):
    """Two q-expansions live on incompatible fractional exponent lattices."""


class WeightMismatch(MinrepError):
    """Modular forms of different weights cannot be added or mixed."""


class InhomogeneousOperator(MinrepError):
    """Operator coefficients do not define a weight homogeneous map."""


class ExpressionError(MinrepError):
    """The operator expression string could not be parsed."""
