"""Model validation, central charges, conformal weights, canonical labels."""

from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, strategies as st

from minrep import (MinimalModel, ModuleLabel, canonical_label, central_charge,
                    conformal_weight, list_modules, validate_model)
from minrep.errors import BothEven, NotCoprime, OutOfRange


def test_validate_model_keeps_convention():
    assert validate_model(3, 4) == MinimalModel(3, 4)
    assert validate_model(4, 3) == MinimalModel(3, 4)
    assert validate_model(2, 5) == MinimalModel(5, 2)


def test_validate_model_rejections():
    with pytest.raises(NotCoprime):
        validate_model(4, 6)
    with pytest.raises(NotCoprime):
        validate_model(9, 6)
    with pytest.raises(BothEven):
        validate_model(4, 8)
    with pytest.raises(OutOfRange):
        validate_model(1, 5)
    with pytest.raises(OutOfRange):
        validate_model(5, 0)


def test_central_charge_values():
    assert central_charge(validate_model(3, 2)) == 0
    assert central_charge(validate_model(3, 4)) == Fraction(1, 2)
    assert central_charge(validate_model(5, 2)) == Fraction(-22, 5)


def test_central_charge_symmetry():
    for p, q in [(3, 4), (5, 7), (5, 4), (9, 2)]:
        assert central_charge(validate_model(p, q)) == central_charge(validate_model(q, p))


def test_conformal_weight_values():
    for p, q in [(3, 4), (5, 2), (5, 7), (7, 4)]:
        assert conformal_weight(validate_model(p, q), 1, 1) == 0
    assert conformal_weight(validate_model(3, 4), 1, 3) == Fraction(1, 2)
    # the Ising spin field h = 1/16 lives at the even-n label (1, 2)
    assert conformal_weight(validate_model(3, 4), 1, 2) == Fraction(1, 16)


def test_conformal_weight_range():
    model = validate_model(3, 4)
    with pytest.raises(OutOfRange):
        conformal_weight(model, 3, 1)
    with pytest.raises(OutOfRange):
        conformal_weight(model, 1, 4)


def test_canonical_label_examples():
    assert canonical_label(validate_model(5, 2), 2, 1) == ModuleLabel(3, 1)
    assert canonical_label(validate_model(3, 4), 1, 3) == ModuleLabel(1, 3)
    assert canonical_label(validate_model(5, 7), 4, 2) == ModuleLabel(1, 5)


def test_list_modules_counts():
    assert len(list_modules(validate_model(3, 4))) == 3
    assert len(list_modules(validate_model(5, 2))) == 2
    assert len(list_modules(validate_model(3, 2))) == 1
    for p, q in [(5, 7), (9, 8), (15, 4)]:
        model = validate_model(p, q)
        assert len(list_modules(model)) == (p - 1) * (q - 1) // 2


def _coprime_models(limit):
    for p in range(3, limit + 1, 2):
        for q in range(2, limit + 1):
            if q != p and gcd(p, q) == 1:
                yield MinimalModel(p, q)


def test_list_modules_distinct_weights():
    # conformal weights separate the canonical labels
    for model in _coprime_models(30):
        weights = [conformal_weight(model, lab.m, lab.n) for lab in list_modules(model)]
        assert len(set(weights)) == len(weights), (model.p, model.q)


def test_list_modules_count_formula_to_50():
    for model in _coprime_models(50):
        assert len(list_modules(model)) == (model.p - 1) * (model.q - 1) // 2


def test_list_modules_no_flip_duplicates():
    for model in _coprime_models(16):
        labels = {(lab.m, lab.n) for lab in list_modules(model)}
        for m, n in labels:
            assert (model.p - m, model.q - n) not in labels


def test_list_modules_matches_sweep_enumeration():
    from minrep.sweeps import acting_labels, canonical_labels
    for model in _coprime_models(12):
        listed = list_modules(model)
        assert listed == list(canonical_labels(model.p, model.q))
        acting = [lab for lab in listed if lab.is_acting]
        assert acting == list(acting_labels(model.p, model.q))


@st.composite
def models_and_labels(draw):
    p = draw(st.integers(min_value=1, max_value=12)) * 2 + 1
    q = draw(st.integers(min_value=2, max_value=25))
    if gcd(p, q) != 1:
        q = q + 1 if gcd(p, q + 1) == 1 else 1 + (q % 2)
    from hypothesis import assume
    assume(gcd(p, q) == 1 and q >= 2 and q != p)
    m = draw(st.integers(min_value=1, max_value=p - 1))
    n = draw(st.integers(min_value=1, max_value=q - 1))
    return MinimalModel(p, q), m, n


@given(models_and_labels())
def test_weight_symmetry_under_flip(data):
    model, m, n = data
    assert conformal_weight(model, m, n) == conformal_weight(model, model.p - m, model.q - n)


@given(models_and_labels())
def test_canonical_label_is_idempotent_and_odd(data):
    model, m, n = data
    label = canonical_label(model, m, n)
    assert label.m % 2 == 1
    assert canonical_label(model, label.m, label.n) == label
    # both representatives canonicalise identically
    assert canonical_label(model, model.p - m, model.q - n) == label
