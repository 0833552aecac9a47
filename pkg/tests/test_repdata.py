"""Exponent profiles, closed forms, minimal weight data, irreducibility."""

from fractions import Fraction
from math import gcd

import pytest

from minrep import (ModuleLabel, irreducibility_certificate,
                    minimal_weight_identity, minimal_weight_profile,
                    prime_case_closed_forms, rep_profile, validate_model)
from minrep.errors import (IrreducibilityUnknown, NotPrimeCase,
                           OutOfScopeDimension, SubsetBlowup)
from minrep.repdata import INCONCLUSIVE, IRREDUCIBLE


def F(a, b=1):
    return Fraction(a, b)


def test_ising_vacuum_profile():
    model = validate_model(3, 4)
    profile = rep_profile(model, ModuleLabel(1, 1))
    assert profile.s == 3
    assert profile.lam == (F(23, 48), F(1, 24), F(-1, 48))
    assert profile.r == profile.lam          # h_{1,1} = 0
    assert profile.c == F(1, 2)


def test_lee_yang_vacuum_profile():
    profile = rep_profile(validate_model(5, 2), ModuleLabel(1, 1))
    assert profile.r == (F(-1, 60), F(11, 60))


def test_two_dim_constant_family_profile():
    profile = rep_profile(validate_model(5, 7), ModuleLabel(3, 5))
    assert profile.r == (F(5, 24), F(-1, 24))
    assert profile.h == F(3, 35)


def test_r_lambda_offset_is_constant():
    for p, q, m, n in [(3, 4, 1, 1), (5, 7, 1, 3), (7, 4, 5, 1), (9, 2, 1, 1)]:
        profile = rep_profile(validate_model(p, q), ModuleLabel(m, n))
        offsets = {rj - lj for rj, lj in zip(profile.r, profile.lam)}
        assert offsets == {-profile.h / 12}


def test_r_exponent_single_fraction_form():
    # r_j = (12 (n_j p - m_j q)^2 - (n p - m q)^2 + (p - q)^2 - 2 p q) / (48 p q)
    for p, q, m, n in [(3, 4, 1, 1), (5, 7, 1, 3), (7, 4, 5, 1), (9, 8, 3, 5)]:
        profile = rep_profile(validate_model(p, q), ModuleLabel(m, n))
        for (mj, nj), rj in zip(profile.partners, profile.r):
            x = (12 * (nj * p - mj * q) ** 2 - (n * p - m * q) ** 2
                 + (p - q) ** 2 - 2 * p * q)
            assert rj == F(x, 48 * p * q)


def test_prime_case_examples():
    case, lam, _ = prime_case_closed_forms(validate_model(5, 2), ModuleLabel(3, 1))
    assert case == "coincident"
    assert lam == (F(-1, 60),)

    case, lam, _ = prime_case_closed_forms(validate_model(3, 4), ModuleLabel(1, 3))
    assert case == "coincident"
    assert lam == (F(1, 24),)
    assert lam[0] == F(3 * 4 - 2 * 3, 48 * 3)

    case, _, r = prime_case_closed_forms(validate_model(3, 8), ModuleLabel(1, 5))
    assert case == "i"
    assert r[0] - r[2] == F(1, 2)


def test_prime_case_matches_general_computation():
    for p in range(3, 26, 2):
        for q in range(2, 26):
            if q == p or gcd(p, q) != 1:
                continue
            model = validate_model(p, q)
            for m in range(1, p, 2):
                for n in range(1, q, 2):
                    s = (p - m) * (q - n) // 2
                    if s != 1 and not _is_prime(s):
                        continue
                    profile = rep_profile(model, ModuleLabel(m, n))
                    _, lam, r = prime_case_closed_forms(model, ModuleLabel(m, n))
                    assert lam == profile.lam
                    assert r == profile.r


def _is_prime(n):
    return n >= 2 and all(n % d for d in range(2, int(n ** 0.5) + 1))


def test_prime_case_rejects_composite():
    with pytest.raises(NotPrimeCase):
        prime_case_closed_forms(validate_model(5, 7), ModuleLabel(1, 3))   # s = 8


def test_minimal_weight_identity_examples():
    # h = 12 (sum lambda)/s + 1 - s, checked by hand on three labels
    for p, q, m, n in [(5, 2, 3, 1), (5, 7, 3, 5), (3, 4, 1, 3)]:
        profile = rep_profile(validate_model(p, q), ModuleLabel(m, n))
        assert minimal_weight_identity(profile)


def test_minimal_weight_profile_examples():
    profile = rep_profile(validate_model(3, 4), ModuleLabel(1, 3))
    data = minimal_weight_profile(profile)
    assert data.alpha == (F(1, 24),)
    assert data.k0 == F(1, 2) == profile.h

    profile = rep_profile(validate_model(5, 2), ModuleLabel(3, 1))
    data = minimal_weight_profile(profile)
    assert data.alpha == (F(59, 60),)
    assert data.k0 == F(59, 5)


def test_minimal_weight_profile_alpha_window():
    for p, q, m, n in [(3, 4, 1, 1), (5, 2, 1, 1), (7, 4, 5, 1), (5, 7, 3, 5)]:
        profile = rep_profile(validate_model(p, q), ModuleLabel(m, n))
        data = minimal_weight_profile(profile)
        for a, l in zip(data.alpha, profile.lam):
            assert 0 <= a < 1
            assert (l - a).denominator == 1


def test_minimal_weight_profile_guards():
    big = rep_profile(validate_model(5, 7), ModuleLabel(1, 3))
    with pytest.raises(OutOfScopeDimension):
        minimal_weight_profile(big)
    small = rep_profile(validate_model(3, 4), ModuleLabel(1, 3))
    with pytest.raises(IrreducibilityUnknown):
        minimal_weight_profile(small, INCONCLUSIVE)


def test_irreducibility_examples():
    assert irreducibility_certificate(
        rep_profile(validate_model(3, 4), ModuleLabel(1, 1))) == IRREDUCIBLE
    # dimension one is vacuously irreducible even with r_1 = 0
    assert irreducibility_certificate(
        rep_profile(validate_model(3, 4), ModuleLabel(1, 3))) == IRREDUCIBLE
    # (9, 2) vacuum has r_2 = 1/12, a twelfth root of unity on a singleton
    profile = rep_profile(validate_model(9, 2), ModuleLabel(1, 1))
    assert F(1, 12) in profile.r
    assert irreducibility_certificate(profile) == INCONCLUSIVE


def test_irreducibility_brute_force_agreement():
    # meet-in-the-middle agrees with direct subset enumeration
    from itertools import combinations
    for p, q, m, n in [(3, 4, 1, 1), (5, 2, 1, 1), (9, 2, 1, 1), (5, 7, 1, 3),
                       (5, 4, 1, 1), (7, 2, 1, 1), (3, 8, 1, 1)]:
        profile = rep_profile(validate_model(p, q), ModuleLabel(m, n))
        bad = False
        for size in range(1, profile.s):
            for subset in combinations(profile.r, size):
                if (12 * sum(subset)).denominator == 1:
                    bad = True
        expected = INCONCLUSIVE if bad else IRREDUCIBLE
        assert irreducibility_certificate(profile) == expected


def test_irreducibility_cap():
    profile = rep_profile(validate_model(23, 24), ModuleLabel(1, 1))
    assert profile.s == 253
    with pytest.raises(SubsetBlowup):
        irreducibility_certificate(profile)


def test_low_dim_families_are_certified_irreducible():
    # every classified s <= 3 acting label passes the certificate
    for p in range(3, 22, 2):
        for q in range(2, 22):
            if q == p or gcd(p, q) != 1:
                continue
            model = validate_model(p, q)
            shapes = [(p - 2, q - 1), (p - 2, q - 2), (p - 4, q - 1),
                      (p - 2, q - 3), (p - 6, q - 1)]
            for m, n in shapes:
                if m < 1 or n < 1 or m % 2 == 0 or n % 2 == 0:
                    continue
                profile = rep_profile(model, ModuleLabel(m, n))
                if profile.s == 1:
                    continue
                assert irreducibility_certificate(profile) == IRREDUCIBLE, (p, q, m, n)
