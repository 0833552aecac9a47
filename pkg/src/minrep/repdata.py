"""Exponent profiles of the modular group representation of an acting label.

For an acting label (m, n) the 1-point functions of the s = (p-m)(q-n)/2
self-coupled partners (m_j, n_j) span a representation rho_{m,n} of SL2(Z).
The j-th component has leading q-exponent

    lambda_j = h_{m_j,n_j} - c/24 = (n_j p - m_j q)^2 / (4 p q) - 1/24,

and with the multiplier normalisation fixed so that eta^{2k} has trivial
multiplier-free transformation, rho_{m,n}(T) is diagonal with entries
e^{2 pi i r_j} where

    r_j = lambda_j - h_{m,n} / 12
        = (12 (n_j p - m_j q)^2 - (n p - m q)^2 + (p - q)^2 - 2 p q) / (48 p q).

When s is 1 or a prime, the label has one of two shapes and the exponents
admit closed forms in (p, q, s, j); in either shape the identity

    h_{m,n} = 12 (sum_j lambda_j) / s + 1 - s

holds, which says the generating vector sits in the minimal weight of its
cyclic module.  A sufficient irreducibility test: rho is irreducible if no
proper nonempty subset of the r_j sums to an element of (1/12) Z, since any
subrepresentation would contribute its determinant, a character of SL2(Z),
and all such characters take twelfth roots of unity on T.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import floor, gcd, isqrt

from .core import central_charge, conformal_weight
from .errors import (IrreducibilityUnknown, NotPrimeCase, OutOfScopeDimension,
                     SubsetBlowup)
from .fusion import rep_dimension, self_coupled_partners

IRREDUCIBLE = "irreducible"
INCONCLUSIVE = "inconclusive"

#: dimension cap for the subset enumeration in irreducibility_certificate
SUBSET_CAP = 20


@dataclass(frozen=True)
class RepProfile:
    """Full exponent data of rho_{m,n}.

    lam[j] is the leading exponent of the j-th 1-point function and r[j]
    the exponent of the j-th diagonal entry of rho(T); both follow the
    lexicographic partner order.  r[j] - lam[j] = -h/12 for every j.
    """

    model: object
    label: object
    s: int
    partners: object
    h_partner: tuple
    lam: tuple
    r: tuple
    h: Fraction
    c: Fraction


def rep_profile(model, label):
    """Compute the exponent profile of the acting label."""
    partners = self_coupled_partners(model, label)
    c = central_charge(model)
    h = conformal_weight(model, label.m, label.n)
    h_partner = tuple(conformal_weight(model, mj, nj) for mj, nj in partners)
    lam = tuple(hj - c / 24 for hj in h_partner)
    r = tuple(l - h / 12 for l in lam)
    return RepProfile(model, label, len(partners), partners, h_partner, lam, r, h, c)


def _is_prime(n):
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    for d in range(3, isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


def prime_case_closed_forms(model, label):
    """Closed-form (lambda_j) and (r_j) when s is 1 or prime.

    Returns (case, lambdas, rs) with case one of "coincident" (s = 1),
    "i" (m = p-2, n = q-s) or "ii" (m = p-2s, n = q-1).  The j index runs
    1..s and coincides with the lexicographic partner order, so the lists
    match rep_profile entrywise.
    """
    p, q = model.p, model.q
    m, n = label.m, label.n
    s = rep_dimension(model, label)
    if not (s == 1 or _is_prime(s)):
        raise NotPrimeCase("dimension %s is neither 1 nor prime" % s)
    if m == p - 2 and n == q - s:
        case = "coincident" if s == 1 else "i"
        lam = tuple(
            Fraction(3 * (1 + s - 2 * j) ** 2 * p * p
                     + 2 * (2 + 3 * s - 6 * j) * p * q
                     + 3 * q * q, 48 * p * q)
            for j in range(1, s + 1)
        )
        r = tuple(
            Fraction((3 * (2 * j - (s + 1)) ** 2 + 1 - s * s) * p
                     + 2 * (1 + 5 * s - 6 * j) * q, 48 * q)
            for j in range(1, s + 1)
        )
    elif m == p - 2 * s and n == q - 1:
        case = "coincident" if s == 1 else "ii"
        lam = tuple(
            Fraction(3 * (1 - 2 * j) ** 2 * q - 2 * p, 48 * p)
            for j in range(1, s + 1)
        )
        r = tuple(
            Fraction((3 * (1 - 2 * j) ** 2 + 1 - 4 * s * s) * q
                     + 4 * (s - 1) * p, 48 * p)
            for j in range(1, s + 1)
        )
    else:
        raise NotPrimeCase(
            "label (%s, %s) does not match a prime-dimension shape" % (m, n)
        )
    return case, lam, r


def minimal_weight_identity(profile):
    """Whether h_{m,n} = 12 (sum lambda_j)/s + 1 - s holds exactly.

    Only meaningful (and provable) for s = 1 or s prime; raises
    NotPrimeCase otherwise.
    """
    s = profile.s
    if not (s == 1 or _is_prime(s)):
        raise NotPrimeCase("dimension %s is neither 1 nor prime" % s)
    return profile.h == Fraction(12, s) * sum(profile.lam) + 1 - s


def irreducibility_certificate(profile, cap=SUBSET_CAP):
    """Sufficient irreducibility test over the eigenvalues of rho(T).

    Returns "irreducible" when no proper nonempty subset S of the r_j has
    12 * sum(S) integral, "inconclusive" otherwise (the criterion is
    sufficient, not necessary).  The subset search is meet-in-the-middle
    over integer residues, O(2^(s/2)); dimensions above the cap raise
    SubsetBlowup.
    """
    s = profile.s
    if s > cap:
        raise SubsetBlowup("dimension %s exceeds the subset cap %s" % (s, cap))
    if s == 1:
        return IRREDUCIBLE
    # 12 r_j = x_j / D on a common denominator D; a subset sum is integral
    # iff the x_j sum to 0 mod D
    twelve_r = [12 * rj for rj in profile.r]
    d = 1
    for t in twelve_r:
        d = d * t.denominator // gcd(d, t.denominator)
    xs = [int(t * d) for t in twelve_r]
    half = s // 2
    left, right = xs[:half], xs[half:]
    right_counts = {}
    for mask in range(1 << len(right)):
        res = sum(right[i] for i in range(len(right)) if mask >> i & 1) % d
        right_counts[res] = right_counts.get(res, 0) + 1
    matches = 0
    for mask in range(1 << len(left)):
        res = sum(left[i] for i in range(len(left)) if mask >> i & 1) % d
        matches += right_counts.get(-res % d, 0)
    # discard the empty set, and the full set when its sum is integral
    matches -= 1
    if sum(xs) % d == 0:
        matches -= 1
    return IRREDUCIBLE if matches == 0 else INCONCLUSIVE


@dataclass(frozen=True)
class MinimalWeightProfile:
    """Reduced exponents alpha_j in [0, 1) and the minimal weight k0.

    alpha_j is the fractional part of lambda_j (equivalently the class of
    r_j + h/12 mod 1) and k0 = 12 (sum alpha_j)/s + 1 - s is the smallest
    weight carrying a nonzero holomorphic vector-valued modular form for
    the representation, valid for irreducible rho of dimension at most 3.
    """

    alpha: tuple
    k0: Fraction


def minimal_weight_profile(profile, certificate=None):
    """Reduced exponents and minimal holomorphic weight, for s <= 3.

    The minimal weight formula is proven for irreducible representations
    of dimension less than four, so both conditions are enforced: larger s raises OutOfScopeDimension, and a certificate other
    than "irreducible" raises IrreducibilityUnknown.
    """
    if profile.s > 3:
        raise OutOfScopeDimension(
            "minimal weight data is restricted to dimension <= 3, got %s" % profile.s
        )
    if certificate is None:
        certificate = irreducibility_certificate(profile)
    if certificate != IRREDUCIBLE:
        raise IrreducibilityUnknown(
            "minimal weight formula needs an irreducibility certificate"
        )
    alpha = tuple(l - floor(l) for l in profile.lam)
    k0 = Fraction(12, profile.s) * sum(alpha) + 1 - profile.s
    return MinimalWeightProfile(alpha, k0)
