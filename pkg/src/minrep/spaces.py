"""Comparison of 1-point function spaces with holomorphic vector-valued forms.

The 1-point functions of an acting label generate a cyclic module V(rho)
over the ring of modular differential operators, graded from the weight of
the generating vector.  Its relation to the space H(rho) of holomorphic
vector-valued modular forms is read off the leading exponents lambda_j:

  * some lambda_j < 0: the generator is not holomorphic at the cusp;
  * all lambda_j in [0, 1) (s <= 3, rho irreducible): V(rho) = H(rho);
  * all lambda_j >= 0 with some lambda_j >= 1 (s <= 3, irreducible):
    V(rho) is properly contained in H(rho).

For s > 3 only the window facts are reported; the equality criterion is
proven only below dimension four.

For the four classified low-dimension shapes the all-in-[0,1) condition is
equivalent to membership of the ratio q/p in explicit intervals whose
endpoints are quadratic irrationalities:

  dimension 1, (p-2, q-1):   2/3 <= q/p < 50/3
  dimension 2, (p-2, q-2):   (22-5*sqrt19)/3 <= q/p < (4-sqrt7)/3
                             or (4+sqrt7)/3 <= q/p < (22+5*sqrt19)/3
  dimension 2, (p-4, q-1):   2/3 <= q/p < 50/27
  dimension 3, (p-2, q-3):   2/3 <= q/p < (7-sqrt13)/3
                             or (7+sqrt13)/3 <= q/p < (19+5*sqrt13)/3

Membership is decided exactly by integer sign computations against the
defining quadratics; no floating point is involved.  The fifth shape
(p-6, q-1) admits no window at all: lambda_1 < 1 forces q/p >= 2/3 while
lambda_3 < 1 forces q/p < 2/3.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidCase, NotLowDimCase
from .repdata import IRREDUCIBLE, irreducibility_certificate, rep_profile

EQUAL = "equal"
PROPER_CONTAINMENT = "proper-containment"
GENERATOR_NOT_HOLOMORPHIC = "generator-not-holomorphic"
WINDOW_FACTS_ONLY = "window-facts-only"

# tags for the classified low-dimension shapes
DIM1 = "d1"
DIM2_I = "d2i"
DIM2_II = "d2ii"
DIM3_I = "d3i"
DIM3_II = "d3ii"

FLAG_NEGATIVE = "negative"
FLAG_UNIT_INTERVAL = "unit-interval"
FLAG_GE_ONE = "ge-one"


def _cmp_fraction_surd(t, c, d):
    """Sign of t - c*sqrt(d) for rational t, c and nonsquare d >= 0."""
    st = (t > 0) - (t < 0)
    sc = (c > 0) - (c < 0)
    if sc == 0 or st != sc:
        if st != sc:
            return 1 if st > sc else -1
        return 0
    lhs, rhs = t * t, c * c * d
    if lhs == rhs:
        return 0
    return st if lhs > rhs else -st


@dataclass(frozen=True)
class Endpoint:
    """The algebraic number u + c*sqrt(d) with u, c rational."""

    u: Fraction
    c: Fraction = Fraction(0)
    d: int = 0

    def cmp(self, x):
        """Sign of x - (u + c*sqrt(d)) for rational x."""
        return _cmp_fraction_surd(Fraction(x) - self.u, self.c, self.d)


@dataclass(frozen=True)
class RatioWindow:
    """Half-open interval [lo, hi) with quadratic-irrational endpoints."""

    lo: Endpoint
    hi: Endpoint

    def contains(self, x):
        return self.lo.cmp(x) >= 0 and self.hi.cmp(x) < 0


def _third(a, c=0, d=0):
    return Endpoint(Fraction(a, 3), Fraction(c, 3), d)


_WINDOWS = {
    DIM1: (RatioWindow(_third(2), Endpoint(Fraction(50, 3))),),
    DIM2_I: (
        RatioWindow(_third(22, -5, 19), _third(4, -1, 7)),
        RatioWindow(_third(4, 1, 7), _third(22, 5, 19)),
    ),
    DIM2_II: (RatioWindow(_third(2), Endpoint(Fraction(50, 27))),),
    DIM3_I: (
        RatioWindow(_third(2), _third(7, -1, 13)),
        RatioWindow(_third(7, 1, 13), _third(19, 5, 13)),
    ),
}


def ratio_bounds(case):
    """The q/p windows for a classified shape, as a tuple of RatioWindow."""
    try:
        return _WINDOWS[case]
    except KeyError:
        raise InvalidCase("unknown dimension case %r" % (case,)) from None


def ratio_in_window(case, ratio):
    """Exact membership of the rational ratio in the case's windows."""
    return any(w.contains(ratio) for w in ratio_bounds(case))


def low_dim_case(model, label):
    """Shape tag of a label among the classified s <= 3 families, or None."""
    p, q, m, n = model.p, model.q, label.m, label.n
    if m == p - 2:
        if n == q - 1:
            return DIM1
        if n == q - 2:
            return DIM2_I
        if n == q - 3:
            return DIM3_I
    if n == q - 1:
        if m == p - 4:
            return DIM2_II
        if m == p - 6:
            return DIM3_II
    return None


def _window_flag(lam):
    if lam < 0:
        return FLAG_NEGATIVE
    if lam < 1:
        return FLAG_UNIT_INTERVAL
    return FLAG_GE_ONE


@dataclass(frozen=True)
class SpaceComparison:
    """Verdict on V(rho) versus H(rho) plus the per-component window facts."""

    status: str
    lambda_flags: tuple
    ratio_check: object = None   # bool for the classified shapes, else None


def space_comparison(profile, certificate=None):
    """Compare V(rho) with H(rho) through the lambda window.

    For s <= 3 the certificate gates the structural claims: equality and
    proper containment are only asserted for certified irreducible
    representations (a negative leading exponent is a raw fact and needs
    no certificate).  For s > 3 only window facts are reported.
    """
    flags = tuple(_window_flag(l) for l in profile.lam)
    model, label = profile.model, profile.label
    case = low_dim_case(model, label)
    ratio_check = None
    if case in _WINDOWS:
        ratio_check = ratio_in_window(case, Fraction(model.q, model.p))

    if any(f == FLAG_NEGATIVE for f in flags):
        if profile.s <= 3:
            return SpaceComparison(GENERATOR_NOT_HOLOMORPHIC, flags, ratio_check)
        return SpaceComparison(WINDOW_FACTS_ONLY, flags, ratio_check)
    if profile.s > 3:
        return SpaceComparison(WINDOW_FACTS_ONLY, flags, ratio_check)
    if certificate is None:
        certificate = irreducibility_certificate(profile)
    if certificate != IRREDUCIBLE:
        return SpaceComparison(WINDOW_FACTS_ONLY, flags, ratio_check)
    if all(f == FLAG_UNIT_INTERVAL for f in flags):
        return SpaceComparison(EQUAL, flags, ratio_check)
    return SpaceComparison(PROPER_CONTAINMENT, flags, ratio_check)


def ratio_lambda_consistency(model, label):
    """Whether window membership of q/p agrees with all lambda_j in [0, 1).

    Defined for the four classified shapes; the two routes are independent
    (interval arithmetic on the closed-form endpoints versus the general
    exponent computation), so True is a theorem and False a bug.
    """
    case = low_dim_case(model, label)
    if case not in _WINDOWS:
        raise NotLowDimCase(
            "label (%s, %s) is not one of the classified window shapes" % (label.m, label.n)
        )
    profile = rep_profile(model, label)
    direct = all(0 <= l < 1 for l in profile.lam)
    member = ratio_in_window(case, Fraction(model.q, model.p))
    return direct == member
