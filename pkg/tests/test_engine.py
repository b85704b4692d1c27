"""Inverse constructions: frozen values, defining-equation gates, dual routes."""

import pytest

from ginvlab.engine import (
    IndexTooLarge,
    InvalidWitness,
    InverseKind,
    MissingWitness,
    core_inverse,
    dmp_inverse,
    drazin_inverse,
    group_inverse,
    hirano_invertible,
    is_ep,
    k_used,
    mp_inverse,
    pseudo_core_inverse,
    right_pseudo_core_inverse,
    verify_definition,
    wd_canonical,
    wd_family_sample,
    wdmp_inverse,
)
from ginvlab.matrices import DimensionMismatch, ExactMatrix, drazin_index
from ginvlab.sampling import variety_pool


def _mat(rows, field="Q"):
    return ExactMatrix.from_rows(rows, field)


def _pool():
    out = []
    for n in (1, 2, 3):
        out.extend(variety_pool(n, "Q", seed=11, count=8))
        out.extend(variety_pool(n, "Q(i)", seed=12, count=6))
    return out


# -- frozen values ---------------------------------------------------------------


def test_mp_frozen_value():
    a = _mat([[1, 1], [0, 0]])
    assert mp_inverse(a).value == _mat([["1/2", 0], ["1/2", 0]])


def test_wd_canonical_frozen_value():
    a = _mat([[2, 0, 0], [0, 0, 1], [0, 0, 0]])
    result = wd_canonical(a)
    assert result.k == 2
    assert result.value == _mat([["1/2", 0, 0], [0, 0, 0], [0, 1, 0]])


def test_mp_of_zero_and_identity():
    z = ExactMatrix.zeros(2, "Q")
    assert mp_inverse(z).value.is_zero()
    i3 = ExactMatrix.identity(3, "Q")
    assert mp_inverse(i3).value == i3
    assert wd_canonical(i3).value == i3


# -- verify_definition as the independent route -----------------------------------


def test_verify_definition_positive_and_negative():
    a = _mat([[0, 1], [0, 0]])
    assert verify_definition(InverseKind.INNER, a, a.conj_transpose())
    assert not verify_definition(InverseKind.MP, a, a)
    assert verify_definition(InverseKind.MP, a, a.conj_transpose())


def test_verify_definition_argument_errors():
    a = _mat([[1]])
    with pytest.raises(ValueError):
        verify_definition("mp", a, a)
    with pytest.raises(DimensionMismatch):
        verify_definition(InverseKind.MP, a, _mat([[1, 0], [0, 1]]))
    with pytest.raises(ValueError):
        verify_definition(InverseKind.WD, a, a, k=0)


def test_wdmp_witness_is_mandatory_and_validated():
    a = _mat([[1, 1], [0, 0]])
    y = wdmp_inverse(a).value
    with pytest.raises(MissingWitness):
        verify_definition(InverseKind.WDMP, a, y)
    with pytest.raises(InvalidWitness):
        verify_definition(InverseKind.WDMP, a, y, witness=ExactMatrix.zeros(2, "Q"))


def test_equations_hold_pointwise_across_the_pool():
    """Re-state each defining system in raw matrix algebra, independent of the
    engine's own gate, and check every construction against it."""
    for a in _pool():
        k = k_used(a)
        ak = a.power(k)
        m = mp_inverse(a).value
        am, ma = a * m, m * a
        assert am * a == a and m * am == m
        assert am.conj_transpose() == am and ma.conj_transpose() == ma

        d = drazin_inverse(a).value
        assert d * ak * a == ak and a * d == d * a and a * d * d == d

        p = pseudo_core_inverse(a).value
        assert (a * p).conj_transpose() == a * p and a * p * p == p
        assert p * ak * a == ak

        r = right_pseudo_core_inverse(a).value
        assert a * r * ak == ak and a * r * r == r
        assert (a * r).conj_transpose() == a * r

        t = dmp_inverse(a).value
        assert t * a * t == t and t * a == d * a and ak * t == ak * m

        w = wd_canonical(a).value
        assert a * w * a == a and a * ak * w == ak and w * ak * a == ak

        y_result = wdmp_inverse(a)
        y, wit = y_result.value, y_result.witness_wd
        assert a * wit * a == a and a * ak * wit == ak and wit * ak * a == ak
        assert y * a * y == y and a * y == a * m and y * ak == wit * ak

        if drazin_index(a).index <= 1:
            g = group_inverse(a).value
            assert g * a * a == a and a * g == g * a and a * g * g == g
            c = core_inverse(a).value
            assert (a * c).conj_transpose() == a * c
            assert a * c * c == c and c * a * a == a


def test_group_and_core_refuse_high_index():
    a = _mat([[0, 1], [0, 0]])
    with pytest.raises(IndexTooLarge):
        group_inverse(a)
    with pytest.raises(IndexTooLarge):
        core_inverse(a)


# -- wd family --------------------------------------------------------------------


def test_wd_family_samples_verify_and_are_deterministic():
    a = _mat([[0, 1, 0], [0, 0, 1], [0, 0, 0]])
    first = wd_family_sample(a, seed=5, count=4)
    second = wd_family_sample(a, seed=5, count=4)
    assert [r.value for r in first] == [r.value for r in second]
    assert len(first) == 4
    k = k_used(a)
    for result in first:
        assert result.kind is InverseKind.WD and result.k == k
        assert verify_definition(InverseKind.WD, a, result.value, k)
    assert wd_family_sample(a, seed=6, count=4) != first


def test_wd_family_is_genuinely_non_unique_at_high_index():
    a = _mat([[0, 1], [0, 0]])
    values = {r.value for r in wd_family_sample(a, seed=0, count=6)}
    assert len(values) > 1


def test_wd_family_count_validation():
    with pytest.raises(ValueError):
        wd_family_sample(_mat([[1]]), seed=0, count=0)


def test_wdmp_accepts_an_explicit_witness():
    a = _mat([[0, 1], [0, 0]])
    for wit_result in wd_family_sample(a, seed=3, count=3):
        y = wdmp_inverse(a, witness=wit_result.value)
        assert y.witness_wd == wit_result.value
        assert verify_definition(
            InverseKind.WDMP, a, y.value, witness=wit_result.value
        )
    with pytest.raises(InvalidWitness):
        wdmp_inverse(a, witness=ExactMatrix.zeros(2, "Q"))


# -- classification helpers ---------------------------------------------------------


def test_is_ep():
    assert is_ep(_mat([[1, 0], [0, 0]]))
    assert not is_ep(_mat([[0, 1], [0, 0]]))
    assert is_ep(ExactMatrix.identity(2, "Q"))


def test_hirano_invertible():
    assert hirano_invertible(_mat([[1, 0], [0, 0]]))  # idempotent: a - a^3 = 0
    assert hirano_invertible(_mat([[0, 1], [0, 0]]))  # nilpotent: a - a^3 = a
    assert not hirano_invertible(_mat([[2]]))  # 2 - 8 = -6 is not nilpotent


def test_k_used_is_at_least_one():
    assert k_used(ExactMatrix.identity(2, "Q")) == 1
    assert k_used(_mat([[0, 1], [0, 0]])) == 2
