"""Exact q-expansions, Eisenstein series, eta powers, the operator ring."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from minrep import (DEFAULT_ORDER, ModularForm, ModularOperator, QSeries,
                    apply_operator, bernoulli, compose, eisenstein, eta_power,
                    modular_derivative)
from minrep.errors import (ExponentMismatch, InhomogeneousOperator, OddIndex,
                           OddWeight, OutOfRange, WeightMismatch)

F = Fraction


def test_bernoulli_values():
    assert bernoulli(2) == F(1, 6)
    assert bernoulli(4) == F(-1, 30)
    assert bernoulli(6) == F(1, 42)
    assert bernoulli(8) == F(-1, 30)
    assert bernoulli(12) == F(-691, 2730)
    with pytest.raises(OddIndex):
        bernoulli(3)
    with pytest.raises(OddIndex):
        bernoulli(0)


def test_eisenstein_leading_coefficients():
    g2 = eisenstein(2)
    g4 = eisenstein(4)
    g6 = eisenstein(6)
    assert g2.series.coefficient(0) == F(-1, 12)
    assert g2.series.coefficient(1) == 2
    assert g4.series.coefficient(0) == F(1, 720)
    assert g4.series.coefficient(1) == F(1, 3)
    assert g4.series.coefficient(2) == F(1, 3) * 9      # sigma_3(2) = 9
    assert g6.series.coefficient(0) == F(-1, 30240)
    assert g6.series.coefficient(1) == F(1, 60)
    with pytest.raises(OddWeight):
        eisenstein(3)


def test_eta_expansion():
    eta = eta_power(1, 20)
    assert eta.weight == F(1, 2)
    assert eta.series.offset == F(1, 24)
    # pentagonal numbers: 1 - q - q^2 + q^5 + q^7 - q^12 - q^15 + ...
    expected = {0: 1, 1: -1, 2: -1, 5: 1, 7: 1, 12: -1, 15: -1}
    for j in range(16):
        assert eta.series.coeffs[j] == expected.get(j, 0)


def test_eta_24_is_discriminant_shape():
    d = eta_power(24, 6)
    assert d.weight == 12
    assert d.series.offset == 1
    assert d.series.coeffs[:4] == (F(1), F(-24), F(252), F(-1472))


def test_eta_leading_exponent():
    for w in (1, 5, 24, 30):
        assert eta_power(w, 8).series.offset == F(w, 24)


def test_modular_derivative_annihilates_eta_powers():
    for w in range(1, 25):
        eta = eta_power(w, DEFAULT_ORDER)
        assert modular_derivative(eta.weight, eta.series).is_zero()


def test_ramanujan_style_identities():
    g4 = eisenstein(4)
    g6 = eisenstein(6)
    assert (modular_derivative(4, g4.series) - g6.series * 14).is_zero()
    assert (modular_derivative(6, g6.series) - g4.series * g4.series * F(60, 7)).is_zero()


def test_theta_alone_on_constants():
    one = QSeries(0, (1, 0, 0, 0))
    # in weight 0 the quasi-modular correction drops out
    assert modular_derivative(0, one).is_zero()


def test_qseries_normalisation_and_coefficient():
    s = QSeries(F(1, 3), (0, 0, 2, 5))
    assert s.offset == F(7, 3)
    assert s.coeffs == (F(2), F(5))
    assert s.coefficient(F(7, 3)) == 2
    assert s.coefficient(F(10, 3)) == 5
    assert s.coefficient(0) == 0          # below the window: exactly zero
    assert s.coefficient(F(1, 2)) == 0    # off the lattice: exactly zero
    with pytest.raises(OutOfRange):
        s.coefficient(F(13, 3))


def test_qseries_add_alignment():
    a = QSeries(F(1, 2), (1, 1))
    b = QSeries(F(5, 2), (3,))
    assert (a + b).coeffs == (F(1), F(1))      # b starts beyond a's window
    c = QSeries(F(3, 2), (4, 4))
    assert (a + c).coeffs == (F(1), F(5))
    with pytest.raises(ExponentMismatch):
        a + QSeries(F(1, 3), (1,))
    zero = QSeries(0, (0, 0))
    assert (a + zero) == a


def test_qseries_serialize():
    s = QSeries(F(1, 24), (1, -1, -1))
    assert s.serialize() == "q^(1/24) * [1, -1, -1]"
    z = QSeries(F(1, 3), (0, 0))
    assert z.serialize() == "q^(0/1) * [0, 0]"


def test_derivative_weight_escalation():
    g4 = eisenstein(4)
    d1 = g4.derivative()
    assert d1.weight == 6
    assert d1.series == g6_times_14().series


def g6_times_14():
    g6 = eisenstein(6)
    return ModularForm(Fraction(6), g6.series * 14)


def test_weight_mismatch_raises():
    with pytest.raises(WeightMismatch):
        eisenstein(4) + eisenstein(6)


def test_operator_homogeneity():
    g4 = eisenstein(4)
    g6 = eisenstein(6)
    # G6 + G4 D is homogeneous (raise 6); G4 + G4 D is not
    ModularOperator((g6, g4))
    with pytest.raises(InhomogeneousOperator):
        ModularOperator((g4, g4))
    with pytest.raises(InhomogeneousOperator):
        ModularOperator.from_form(g4) + ModularOperator.from_form(g6)


def test_operator_compose_leibniz():
    # D after G4 equals G4 D + (D_4 G4) = G4 D + 14 G6
    der = ModularOperator.derivative()
    g4op = ModularOperator.from_form(eisenstein(4))
    composed = compose(der, g4op)
    g6 = eisenstein(6)
    assert composed.degree == 1
    assert (composed.coeffs[0].series - g6.series * 14).is_zero()
    assert (composed.coeffs[1].series - eisenstein(4).series).is_zero()


def test_identity_operator():
    ident = ModularOperator.identity()
    g4 = eisenstein(4)
    out = apply_operator(ident, [g4.series], 4)[0]
    assert (out - g4.series).is_zero()
    # 1 is a two-sided identity for composition
    der = ModularOperator.derivative()
    probe = eta_power(2).series
    for composed in (compose(ident, der), compose(der, ident)):
        left = apply_operator(composed, [probe], F(1))[0]
        right = apply_operator(der, [probe], F(1))[0]
        assert (left - right).is_zero()


def test_double_derivative_associativity_instance():
    der = ModularOperator.derivative()
    g4op = ModularOperator.from_form(eisenstein(4))
    probe = eta_power(2).series
    lhs = compose(compose(der, der), g4op)
    rhs = compose(der, compose(der, g4op))
    out_l = apply_operator(lhs, [probe], F(1))[0]
    out_r = apply_operator(rhs, [probe], F(1))[0]
    assert (out_l - out_r).is_zero()


def test_apply_weight_checks():
    der = ModularOperator.derivative()
    with pytest.raises(WeightMismatch):
        apply_operator(der, [eisenstein(4)], 6)
    out = apply_operator(der, [eisenstein(4)], 4)[0]
    assert (out - eisenstein(6).series * 14).is_zero()


def test_apply_on_vectors():
    g4 = eisenstein(4)
    comps = [eta_power(8).series, eta_power(8).series * 3]
    out = apply_operator(ModularOperator.from_form(g4), comps, 4)
    assert (out[0] * 3 - out[1]).is_zero()


def _operator_pool(order=24):
    one = ModularForm(F(0), QSeries(0, (1,) + (0,) * order))
    g4 = eisenstein(4, order)
    g6 = eisenstein(6, order)
    g4sq = g4 * g4
    by_weight = {0: one, 4: g4, 6: g6, 8: g4sq}
    ops = []
    # all homogeneous operators sum phi_i D^i, degree <= 3, with every slot
    # coefficient drawn from {1, G4, G6, G4^2} at the weight the raise forces
    for raise_to in (0, 4, 6, 8, 10, 12):
        for degree in range(4):
            slots = []
            for i in range(degree + 1):
                want = raise_to - 2 * i
                slots.append(by_weight.get(want))
            if slots[-1] is None:
                continue
            ops.append(ModularOperator(slots))
    return ops


def test_operator_composition_associative_on_pool():
    probe = eta_power(2, 24)
    pool = _operator_pool()
    import random
    rng = random.Random(20240811)
    for _ in range(40):
        a, b, c = rng.choice(pool), rng.choice(pool), rng.choice(pool)
        lhs = compose(compose(a, b), c)
        rhs = compose(a, compose(b, c))
        assert lhs.degree == a.degree + b.degree + c.degree
        out_l = apply_operator(lhs, [probe.series], probe.weight)[0]
        out_r = apply_operator(rhs, [probe.series], probe.weight)[0]
        assert (out_l - out_r).is_zero()


def test_compose_apply_consistency_and_associativity():
    der = ModularOperator.derivative()
    g4op = ModularOperator.from_form(eisenstein(4))
    probe = eta_power(2)
    for a, b in [(der, g4op), (g4op, der), (der, der)]:
        together = apply_operator(compose(a, b), [probe.series], probe.weight)[0]
        stepwise = apply_operator(
            a, apply_operator(b, [probe.series], probe.weight),
            probe.weight + b.weight_raise)[0]
        assert (together - stepwise).is_zero()
    lhs = compose(compose(der, g4op), der)
    rhs = compose(der, compose(g4op, der))
    applied_l = apply_operator(lhs, [probe.series], probe.weight)[0]
    applied_r = apply_operator(rhs, [probe.series], probe.weight)[0]
    assert (applied_l - applied_r).is_zero()


_small_fracs = st.fractions(min_value=-4, max_value=4, max_denominator=6)


@st.composite
def _series(draw, offset=None):
    coeffs = draw(st.lists(_small_fracs, min_size=1, max_size=6))
    if offset is None:
        offset = draw(st.fractions(min_value=-2, max_value=2, max_denominator=12))
    return QSeries(offset, coeffs)


@given(_series(offset=F(0)), _series(offset=F(0)))
@settings(max_examples=60)
def test_multiplication_commutes(a, b):
    assert (a * b - b * a).is_zero()


@given(_series(offset=F(0)), _series(offset=F(0)), _series(offset=F(0)))
@settings(max_examples=60)
def test_multiplication_distributes(a, b, c):
    lhs = a * (b + c)
    rhs = a * b + a * c
    assert (lhs - rhs).is_zero()


@given(_series())
@settings(max_examples=60)
def test_leading_coefficient_normalised(s):
    assert s.is_zero() or s.coeffs[0] != 0
