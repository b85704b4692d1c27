"""Matrix layer: exact algebra, rank machinery, index, and subspace predicates."""

import pytest
from gmpy2 import mpq
from hypothesis import given, settings
from hypothesis import strategies as st

from ginvlab.matrices import (
    DimensionMismatch,
    ExactMatrix,
    MatrixFormatError,
    SingularMatrix,
    drazin_index,
    inverse_matrix,
    left_nullspace_basis,
    nilpotent_check,
    nullspace_basis,
    range_included,
    rank,
    rank_factorization,
    row_space_equal,
    row_space_included,
    rref_rank,
)
from ginvlab.scalars import FIELD_GAUSSIAN, FIELD_RATIONAL, scalar_zero


def _mat(rows, field=FIELD_RATIONAL):
    return ExactMatrix.from_rows(rows, field)


small = st.integers(-4, 4)


def square_matrices(field=FIELD_RATIONAL, max_n=4):
    def build(n, flat):
        rows = [flat[i * n : (i + 1) * n] for i in range(n)]
        return ExactMatrix.from_rows(rows, field)

    return st.integers(1, max_n).flatmap(
        lambda n: st.builds(build, st.just(n), st.lists(small, min_size=n * n, max_size=n * n))
    )


def gaussian_matrices(max_n=3):
    def build(n, flat):
        rows = [
            [f"{flat[2*(i*n+j)]}+{flat[2*(i*n+j)+1]}*i".replace("+-", "-") for j in range(n)]
            for i in range(n)
        ]
        return ExactMatrix.from_rows(rows, FIELD_GAUSSIAN)

    return st.integers(1, max_n).flatmap(
        lambda n: st.builds(
            build, st.just(n), st.lists(small, min_size=2 * n * n, max_size=2 * n * n)
        )
    )


# -- construction and serialization ----------------------------------------------


def test_from_rows_accepts_ints_strings_and_scalars():
    a = _mat([[1, "1/2"], [mpq(-3), 0]])
    assert a.rows[0][1] == mpq(1, 2)
    assert a.rows[1][0] == mpq(-3)


def test_from_rows_rejects_ragged_and_empty():
    with pytest.raises(MatrixFormatError):
        ExactMatrix.from_rows([[1, 2], [3]], FIELD_RATIONAL)
    with pytest.raises(MatrixFormatError):
        ExactMatrix.from_rows([], FIELD_RATIONAL)


@given(square_matrices() | gaussian_matrices())
def test_json_round_trip(a):
    assert ExactMatrix.from_json(a.to_json()) == a


def test_mixed_field_operations_rejected():
    a = _mat([[1]])
    b = ExactMatrix.from_rows([[1]], FIELD_GAUSSIAN)
    with pytest.raises(DimensionMismatch):
        a * b
    with pytest.raises(DimensionMismatch):
        a + _mat([[1, 0], [0, 1]])


# -- ring axioms of the matrix algebra --------------------------------------------


@settings(max_examples=60)
@given(square_matrices(max_n=3), square_matrices(max_n=3), square_matrices(max_n=3))
def test_matrix_algebra_laws(a, b, c):
    n = max(a.n, b.n, c.n)
    a, b, c = (
        m if m.n == n else ExactMatrix.identity(n, FIELD_RATIONAL)
        for m in (a, b, c)
    )
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a * b).conj_transpose() == b.conj_transpose() * a.conj_transpose()
    assert a.conj_transpose().conj_transpose() == a


@given(gaussian_matrices())
def test_conj_transpose_is_involutive_over_gaussians(a):
    assert a.conj_transpose().conj_transpose() == a
    h = a * a.conj_transpose()
    assert h.is_hermitian()


def test_power():
    s = _mat([[0, 1], [0, 0]])
    assert s.power(1) == s
    assert s.power(2).is_zero()
    assert _mat([[2]]).power(5) == _mat([[32]])
    assert s.power(0) == ExactMatrix.identity(2, FIELD_RATIONAL)
    with pytest.raises(ValueError):
        s.power(-1)


# -- rank machinery ----------------------------------------------------------------


def test_rank_known_cases():
    assert rank(_mat([[1, 2], [2, 4]])) == 1
    assert rank(ExactMatrix.identity(3, FIELD_RATIONAL)) == 3
    assert rank(ExactMatrix.zeros(2, FIELD_RATIONAL)) == 0
    reduced, r = rref_rank(_mat([["1/2", 1], [1, 2]]))
    assert r == 1
    assert reduced == _mat([[1, 2], [0, 0]])


@settings(max_examples=60)
@given(square_matrices() | gaussian_matrices())
def test_rank_factorization_reconstructs(a):
    if a.is_zero():
        return
    f, g = rank_factorization(a)
    r = rank(a)
    from ginvlab.matrices import mul_rect

    assert len(f[0]) == r and len(g) == r
    assert mul_rect(f, g, a.field) == a.rows


def test_inverse_matrix():
    a = _mat([[2, 1], [1, 1]])
    assert a * inverse_matrix(a) == ExactMatrix.identity(2, FIELD_RATIONAL)
    with pytest.raises(SingularMatrix):
        inverse_matrix(_mat([[1, 2], [2, 4]]))


# -- index and nilpotency -----------------------------------------------------------


def test_drazin_index_cases():
    assert drazin_index(ExactMatrix.identity(3, FIELD_RATIONAL)).index == 0
    assert drazin_index(_mat([[0, 1], [0, 0]])).index == 2
    shift3 = _mat([[0, 1, 0], [0, 0, 1], [0, 0, 0]])
    assert drazin_index(shift3).index == 3
    assert drazin_index(_mat([[1, 0], [0, 0]])).index == 1


def test_nilpotent_check():
    assert nilpotent_check(_mat([[0, 1], [0, 0]]))
    assert not nilpotent_check(_mat([[1, 0], [0, 0]]))
    assert nilpotent_check(ExactMatrix.zeros(3, FIELD_RATIONAL))


# -- null spaces and subspace predicates ----------------------------------------------


def _vec_mat(v, m):
    zero = scalar_zero(m.field)
    return [sum((v[i] * m.rows[i][j] for i in range(m.n)), zero) for j in range(m.n)]


def _mat_vec(m, v):
    zero = scalar_zero(m.field)
    return [sum((m.rows[i][j] * v[j] for j in range(m.n)), zero) for i in range(m.n)]


@settings(max_examples=60)
@given(square_matrices() | gaussian_matrices())
def test_nullspace_bases_annihilate_and_have_full_count(a):
    zero = scalar_zero(a.field)
    right = nullspace_basis(a)
    left = left_nullspace_basis(a)
    assert len(right) == a.n - rank(a) == len(left)
    for v in right:
        assert all(entry == zero for entry in _mat_vec(a, v))
    for v in left:
        assert all(entry == zero for entry in _vec_mat(v, a))


@settings(max_examples=80)
@given(square_matrices(max_n=3), square_matrices(max_n=3))
def test_annihilator_inclusions_match_subspace_predicates(a, b):
    """Kernel route and rank route must agree on both annihilator inclusions."""
    if a.n != b.n:
        return
    zero = scalar_zero(a.field)
    left_ann_incl = all(
        all(entry == zero for entry in _vec_mat(v, a)) for v in left_nullspace_basis(b)
    )
    assert left_ann_incl == range_included(a, b)
    right_ann_incl = all(
        all(entry == zero for entry in _mat_vec(a, v)) for v in nullspace_basis(b)
    )
    assert right_ann_incl == row_space_included(a, b)


@settings(max_examples=60)
@given(square_matrices(max_n=3), square_matrices(max_n=3))
def test_products_shrink_row_and_column_spaces(a, b):
    if a.n != b.n:
        return
    assert range_included(a * b, a)
    assert row_space_included(a * b, b)
    assert row_space_equal(a, a)
    assert row_space_included(a, a) and range_included(a, a)


def test_subspace_predicates_known_cases():
    a = _mat([[1, 0], [0, 0]])
    b = _mat([[1, 0], [0, 1]])
    assert range_included(a, b) and not range_included(b, a)
    assert row_space_included(a, b) and not row_space_included(b, a)
    assert row_space_equal(_mat([[1, 1], [0, 0]]), _mat([[2, 2], [1, 1]]))
