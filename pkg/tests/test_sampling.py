"""Matrix samplers: spec parsing, planted structure, and deterministic draws."""

import random

import pytest

from ginvlab.engine import is_ep
from ginvlab.matrices import ExactMatrix, drazin_index, nilpotent_check, rank
from ginvlab.sampling import (
    MatrixSampler,
    MatrixSpecError,
    cayley_unitary,
    ep_matrix,
    hermitian_matrix,
    hermitian_projector,
    idempotent_matrix,
    nilpotent_matrix,
    parse_matrix_spec,
    planted_index_matrix,
    planted_rank_matrix,
    random_matrix,
    shift_nilpotent,
    unimodular_matrix,
    variety_pool,
)

FIELDS = ("Q", "Q(i)")


def test_parse_matrix_spec():
    assert parse_matrix_spec("4:Q") == (4, "Q")
    assert parse_matrix_spec("2:Q(i)") == (2, "Q(i)")
    assert parse_matrix_spec("6:Q") == (6, "Q")  # engine fuzz ceiling


@pytest.mark.parametrize("bad", ["", "0:Q", "7:Q", "3:R", "Q:3", "3", "3:Qi"])
def test_parse_matrix_spec_rejects(bad):
    with pytest.raises(MatrixSpecError):
        parse_matrix_spec(bad)


# -- planted-structure generators --------------------------------------------------


@pytest.mark.parametrize("field", FIELDS)
def test_planted_generators_have_their_properties(field):
    rng = random.Random(42)
    for n in (1, 2, 3, 4):
        ident = ExactMatrix.identity(n, field)

        u = unimodular_matrix(rng, n, field)
        assert rank(u) == n

        c = cayley_unitary(rng, n, field)
        assert c.conj_transpose() * c == ident

        for r in range(n + 1):
            assert rank(planted_rank_matrix(rng, n, field, r)) == r
            p = idempotent_matrix(rng, n, field, r)
            assert p * p == p and rank(p) == r
            h = hermitian_projector(rng, n, field, r)
            assert h * h == h and h.is_hermitian() and rank(h) == r
            e = ep_matrix(rng, n, field, r)
            assert is_ep(e) and rank(e) == r

        s = nilpotent_matrix(rng, n, field)
        assert nilpotent_check(s)

        m = hermitian_matrix(rng, n, field)
        assert m.is_hermitian()

        for k in range(1, n + 1):
            assert drazin_index(shift_nilpotent(n, field, k)).index == max(k, 1)
            planted = planted_index_matrix(rng, n, field, k)
            assert drazin_index(planted).index == k


def test_random_matrix_fraction_flag():
    rng = random.Random(3)
    a = random_matrix(rng, 3, "Q", fractions=True)
    assert a.n == 3 and a.field == "Q"
    z = random_matrix(rng, 2, "Q(i)")
    assert z.field == "Q(i)"


# -- pools and samplers ---------------------------------------------------------------


@pytest.mark.parametrize("field", FIELDS)
def test_variety_pool_is_deterministic_and_varied(field):
    pool = variety_pool(3, field, seed=9, count=24)
    again = variety_pool(3, field, seed=9, count=24)
    assert pool == again
    assert len(pool) == 24
    assert all(m.n == 3 and m.field == field for m in pool)
    assert any(nilpotent_check(m) for m in pool)
    assert any(rank(m) == 3 for m in pool)
    assert any(drazin_index(m).index >= 2 for m in pool)
    assert any(m.is_hermitian() for m in pool)
    other = variety_pool(3, field, seed=10, count=24)
    assert other != pool


def test_sampler_bindings_are_deterministic():
    draws = [
        list(MatrixSampler(2, "Q", seed=5, strategy="mixed").bindings(("a", "b"), 6))
        for _ in range(2)
    ]
    assert draws[0] == draws[1]
    assert all(set(bind) == {"a", "b"} for bind in draws[0])
    shifted = list(
        MatrixSampler(2, "Q", seed=6, strategy="mixed").bindings(("a", "b"), 6)
    )
    assert shifted != draws[0]


def test_sampler_structured_strategies():
    zero2 = ExactMatrix.zeros(2, "Q")
    for bind in MatrixSampler(2, "Q", seed=1, strategy="orthogonal").bindings(
        ("a", "b"), 10
    ):
        a, b = bind["a"], bind["b"]
        assert a * b == zero2 and b * a == zero2

    for bind in MatrixSampler(2, "Q", seed=2, strategy="commuting").bindings(
        ("a", "b"), 10
    ):
        a, b = bind["a"], bind["b"]
        assert a * b == b * a

    for bind in MatrixSampler(2, "Q", seed=3, strategy="commuting_projectors").bindings(
        ("a", "b"), 10
    ):
        a, b = bind["a"], bind["b"]
        assert a * a == a and b * b == b and a * b == b * a

    for bind in MatrixSampler(2, "Q", seed=4, strategy="hermitian").bindings(("a",), 10):
        assert bind["a"].is_hermitian()

    for bind in MatrixSampler(2, "Q", seed=5, strategy="equal").bindings(("a", "b"), 10):
        assert bind["a"] == bind["b"]

    for bind in MatrixSampler(2, "Q(i)", seed=6, strategy="orthogonal_hermitian").bindings(
        ("a", "b"), 10
    ):
        a, b = bind["a"], bind["b"]
        assert a.is_hermitian() and b.is_hermitian()
        assert a * b == ExactMatrix.zeros(2, "Q(i)") and b * a == ExactMatrix.zeros(2, "Q(i)")

    for bind in MatrixSampler(2, "Q", seed=7, strategy="ep").bindings(("a",), 10):
        assert is_ep(bind["a"])


def test_sampler_rejects_unknown_strategy():
    with pytest.raises(ValueError):
        MatrixSampler(2, "Q", strategy="chaotic")


def test_sampler_describe():
    info = MatrixSampler(3, "Q(i)", seed=2, strategy="mixed").describe()
    assert info["type"] == "matrix"
    assert info["dimension"] == 3 and info["field"] == "Q(i)"
