"""Square exact matrices over Q and Q(i) with the linear algebra this package needs.

Everything here is exact: entries are gmpy2.mpq or GaussianRational values,
row reduction uses deterministic first-nonzero pivoting (scan columns left to
right, rows top to bottom), and no floating point ever appears.

>>> a = ExactMatrix.from_rows([[1, 1], [0, 0]], "Q")
>>> rref_rank(a)[1]
1
>>> drazin_index(a).index
1
>>> nilpotent_check(ExactMatrix.from_rows([[0, 1], [0, 0]], "Q"))
True
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from gmpy2 import mpq

from .scalars import (
    FIELD_GAUSSIAN,
    FIELD_RATIONAL,
    FIELDS,
    GaussianRational,
    conjugate,
    format_scalar,
    parse_scalar,
    scalar_one,
    scalar_zero,
)


class MatrixFormatError(ValueError):
    """Raised for malformed matrix JSON or inconsistent entry data."""


class DimensionMismatch(ValueError):
    """Raised when an operation mixes incompatible sizes or fields."""


class ZeroMatrix(ValueError):
    """Raised when an operation requires a nonzero matrix (rank >= 1)."""


def _coerce_entry(value, field):
    if isinstance(value, str):
        return parse_scalar(value, field)
    if field == FIELD_RATIONAL:
        if isinstance(value, GaussianRational):
            raise MatrixFormatError("Gaussian entry in a rational matrix")
        return mpq(value)
    if isinstance(value, GaussianRational):
        return value
    return GaussianRational(value, 0)


class ExactMatrix:
    """An immutable square matrix with exact entries.

    >>> m = ExactMatrix.from_rows([["1/2", 0], [0, 1]], "Q")
    >>> (m * m).rows[0][0]
    mpq(1,4)
    >>> m == m.conj_transpose()
    True
    """

    __slots__ = ("n", "field", "rows")

    def __init__(self, n, field, rows):
        if field not in FIELDS:
            raise MatrixFormatError(f"unknown field {field!r}; expected one of {FIELDS}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("ExactMatrix is immutable")

    @classmethod
    def from_rows(cls, rows, field):
        n = len(rows)
        if n == 0:
            raise MatrixFormatError("matrix must have at least one row")
        coerced = []
        for row in rows:
            if len(row) != n:
                raise MatrixFormatError(
                    f"matrix must be square: got a row of length {len(row)} in a "
                    f"{n}-row matrix"
                )
            coerced.append(tuple(_coerce_entry(v, field) for v in row))
        return cls(n, field, tuple(coerced))

    @classmethod
    def identity(cls, n, field):
        one, zero = scalar_one(field), scalar_zero(field)
        return cls(
            n,
            field,
            tuple(
                tuple(one if i == j else zero for j in range(n)) for i in range(n)
            ),
        )

    @classmethod
    def zeros(cls, n, field):
        zero = scalar_zero(field)
        return cls(n, field, tuple(tuple(zero for _ in range(n)) for _ in range(n)))

    def _check_compatible(self, other):
        if not isinstance(other, ExactMatrix):
            raise DimensionMismatch(f"expected ExactMatrix, got {type(other).__name__}")
        if self.n != other.n or self.field != other.field:
            raise DimensionMismatch(
                f"incompatible matrices: {self.n}x{self.n} over {self.field} vs "
                f"{other.n}x{other.n} over {other.field}"
            )

    def __add__(self, other):
        self._check_compatible(other)
        return ExactMatrix(
            self.n,
            self.field,
            tuple(
                tuple(a + b for a, b in zip(ra, rb))
                for ra, rb in zip(self.rows, other.rows)
            ),
        )

    def __sub__(self, other):
        self._check_compatible(other)
        return ExactMatrix(
            self.n,
            self.field,
            tuple(
                tuple(a - b for a, b in zip(ra, rb))
                for ra, rb in zip(self.rows, other.rows)
            ),
        )

    def __neg__(self):
        return ExactMatrix(
            self.n, self.field, tuple(tuple(-a for a in row) for row in self.rows)
        )

    def __mul__(self, other):
        self._check_compatible(other)
        cols = tuple(zip(*other.rows))
        return ExactMatrix(
            self.n,
            self.field,
            tuple(
                tuple(sum((a * b for a, b in zip(row, col)), scalar_zero(self.field)) for col in cols)
                for row in self.rows
            ),
        )

    def scalar_mul(self, s):
        s = _coerce_entry(s, self.field)
        return ExactMatrix(
            self.n, self.field, tuple(tuple(s * a for a in row) for row in self.rows)
        )

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return (
            self.n == other.n and self.field == other.field and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.n, self.field, self.rows))

    def conj_transpose(self):
        """The involution: conjugate transpose (plain transpose over Q)."""
        return ExactMatrix(
            self.n,
            self.field,
            tuple(tuple(conjugate(a) for a in col) for col in zip(*self.rows)),
        )

    def power(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError(f"matrix power requires an integer exponent >= 0, got {k!r}")
        result = ExactMatrix.identity(self.n, self.field)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def is_zero(self):
        zero = scalar_zero(self.field)
        return all(a == zero for row in self.rows for a in row)

    def is_hermitian(self):
        return self == self.conj_transpose()

    def to_json(self):
        return {
            "n": self.n,
            "field": self.field,
            "entries": [[format_scalar(a) for a in row] for row in self.rows],
        }

    @classmethod
    def from_json(cls, data):
        if isinstance(data, str):
            try:
                data = json.loads(data)
            except json.JSONDecodeError as exc:
                raise MatrixFormatError(f"invalid matrix JSON: {exc}") from exc
        if not isinstance(data, dict):
            raise MatrixFormatError("matrix JSON must be an object")
        missing = {"n", "field", "entries"} - set(data)
        if missing:
            raise MatrixFormatError(f"matrix JSON missing keys: {sorted(missing)}")
        n, field, entries = data["n"], data["field"], data["entries"]
        if not isinstance(n, int) or n < 1:
            raise MatrixFormatError(f"matrix size must be a positive integer, got {n!r}")
        if not isinstance(entries, list) or len(entries) != n:
            raise MatrixFormatError(f"expected {n} rows of entries")
        try:
            return cls.from_rows(entries, field)
        except ValueError as exc:
            raise MatrixFormatError(str(exc)) from exc

    def __repr__(self):
        body = "; ".join(
            " ".join(format_scalar(a) for a in row) for row in self.rows
        )
        return f"ExactMatrix({self.field}, [{body}])"


@dataclass(frozen=True)
class IndexResult:
    """Drazin index of a matrix plus the rank sequence that certifies it.

    rank_sequence[i] is the rank of the i-th power; it is strictly decreasing
    up to position ``index`` and constant afterwards.
    """

    index: int
    rank_sequence: tuple


def _rref(rows, ncols):
    """Row-reduce a rectangular list of row tuples in place-free style.

    Returns (reduced rows, rank, pivot column indices). Pivoting is
    deterministic: columns left to right, first nonzero row top to bottom.
    """
    work = [list(row) for row in rows]
    nrows = len(work)
    pivots = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, nrows):
            if work[i][c] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        work[r], work[pivot_row] = work[pivot_row], work[r]
        inv = 1 / work[r][c]
        work[r] = [a * inv for a in work[r]]
        for i in range(nrows):
            if i != r and work[i][c] != 0:
                f = work[i][c]
                work[i] = [a - f * b for a, b in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return [tuple(row) for row in work], r, pivots


def rref_rank(matrix):
    """Reduced row echelon form and rank of a square exact matrix.

    >>> m = ExactMatrix.from_rows([[2, 4], [1, 2]], "Q")
    >>> reduced, rank = rref_rank(m)
    >>> rank
    1
    >>> reduced.rows[0]
    (mpq(1,1), mpq(2,1))
    """
    reduced, rank, _ = _rref(matrix.rows, matrix.n)
    return ExactMatrix(matrix.n, matrix.field, tuple(reduced)), rank


def rank(matrix):
    return rref_rank(matrix)[1]


def rank_factorization(matrix):
    """Full-rank factorization: matrix = F * G with F n-by-r and G r-by-n.

    F holds the pivot columns of the matrix, G the nonzero rows of its rref.
    Both are returned as tuples of row tuples. Raises ZeroMatrix when the
    matrix is zero (rank 0 admits no full-rank factorization).

    >>> F, G = rank_factorization(ExactMatrix.from_rows([[1, 1], [0, 0]], "Q"))
    >>> F
    ((mpq(1,1),), (mpq(0,1),))
    >>> G
    ((mpq(1,1), mpq(1,1)),)
    """
    reduced, r, pivots = _rref(matrix.rows, matrix.n)
    if r == 0:
        raise ZeroMatrix("rank factorization requires a nonzero matrix")
    F = tuple(tuple(row[c] for c in pivots) for row in matrix.rows)
    G = tuple(reduced[:r])
    return F, G


def mul_rect(a_rows, b_rows, field):
    """Multiply rectangular row-tuple matrices (shapes must chain)."""
    if a_rows and b_rows and len(a_rows[0]) != len(b_rows):
        raise DimensionMismatch(
            f"cannot multiply {len(a_rows)}x{len(a_rows[0])} by "
            f"{len(b_rows)}x{len(b_rows[0])}"
        )
    cols = tuple(zip(*b_rows))
    zero = scalar_zero(field)
    return tuple(
        tuple(sum((a * b for a, b in zip(row, col)), zero) for col in cols)
        for row in a_rows
    )


def conj_transpose_rect(rows):
    return tuple(tuple(conjugate(a) for a in col) for col in zip(*rows))


class SingularMatrix(ValueError):
    """Raised when an exact inverse of a singular matrix is requested."""


def inverse_matrix(matrix):
    """Exact inverse of a square matrix; raises SingularMatrix if rank < n.

    >>> inverse_matrix(ExactMatrix.from_rows([[2, 0], [0, 4]], "Q")).rows[1][1]
    mpq(1,4)
    """
    n = matrix.n
    ident = ExactMatrix.identity(n, matrix.field)
    augmented = tuple(row + irow for row, irow in zip(matrix.rows, ident.rows))
    reduced, _, pivots = _rref(augmented, 2 * n)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        raise SingularMatrix("matrix has no inverse (rank below its size)")
    return ExactMatrix(n, matrix.field, tuple(row[n:] for row in reduced[:n]))


def drazin_index(matrix):
    """Smallest k with rank(A^k) == rank(A^(k+1)), certified by the rank sequence.

    >>> drazin_index(ExactMatrix.from_rows([[0, 1], [0, 0]], "Q"))
    IndexResult(index=2, rank_sequence=(2, 1, 0, 0))
    >>> drazin_index(ExactMatrix.identity(3, "Q")).index
    0
    """
    ranks = [matrix.n]
    power = ExactMatrix.identity(matrix.n, matrix.field)
    for i in range(1, matrix.n + 2):
        power = power * matrix
        ranks.append(rank(power))
        if ranks[-1] == ranks[-2]:
            return IndexResult(index=i - 1, rank_sequence=tuple(ranks))
    raise AssertionError("rank sequence failed to stabilize (unreachable)")


def nilpotent_check(matrix):
    """True when some power of the matrix vanishes (equivalently A^n == 0)."""
    return matrix.power(matrix.n).is_zero()


def _require_same_shape(a, b):
    if not isinstance(a, ExactMatrix) or not isinstance(b, ExactMatrix):
        raise DimensionMismatch("expected ExactMatrix operands")
    if a.n != b.n or a.field != b.field:
        raise DimensionMismatch(
            f"incompatible matrices: {a.n}x{a.n} over {a.field} vs "
            f"{b.n}x{b.n} over {b.field}"
        )


def row_space_equal(a, b):
    """True when the two matrices have identical row spaces (rref canonical form)."""
    _require_same_shape(a, b)
    ra, rka, _ = _rref(a.rows, a.n)
    rb, rkb, _ = _rref(b.rows, b.n)
    return rka == rkb and ra[:rka] == rb[:rkb]


def row_space_included(a, b):
    """True when row(a) is contained in row(b)."""
    _require_same_shape(a, b)
    _, rkb, _ = _rref(b.rows, b.n)
    _, rk_stack, _ = _rref(b.rows + a.rows, a.n)
    return rk_stack == rkb


def range_included(a, b):
    """True when the column space of a is contained in the column space of b."""
    _require_same_shape(a, b)
    _, rkb, _ = _rref(b.rows, b.n)
    stacked = tuple(rb + ra for rb, ra in zip(b.rows, a.rows))
    _, rk_aug, _ = _rref(stacked, 2 * a.n)
    return rk_aug == rkb


def nullspace_basis(matrix):
    """Basis of the right null space {v : matrix v = 0}, as row tuples.

    One basis vector per non-pivot column of the rref (the standard
    free-variable construction); empty tuple for an invertible matrix.

    >>> vs = nullspace_basis(ExactMatrix.from_rows([[1, 1], [0, 0]], "Q"))
    >>> [[str(x) for x in v] for v in vs]
    [['-1', '1']]
    >>> nullspace_basis(ExactMatrix.identity(2, "Q"))
    ()
    """
    reduced, _, pivots = _rref(matrix.rows, matrix.n)
    one = scalar_one(matrix.field)
    zero = scalar_zero(matrix.field)
    basis = []
    for free in range(matrix.n):
        if free in pivots:
            continue
        v = [zero] * matrix.n
        v[free] = one
        for i, p in enumerate(pivots):
            v[p] = -reduced[i][free]
        basis.append(tuple(v))
    return tuple(basis)


def left_nullspace_basis(matrix):
    """Basis of the left null space {v : v matrix = 0}, as row tuples.

    Computed as the right null space of the plain (unconjugated) transpose,
    since v m = 0 exactly when m-transpose applied to v vanishes.

    >>> vs = left_nullspace_basis(ExactMatrix.from_rows([[1, 0], [1, 0]], "Q"))
    >>> [[str(x) for x in v] for v in vs]
    [['-1', '1']]
    """
    flipped = ExactMatrix(matrix.n, matrix.field, tuple(zip(*matrix.rows)))
    return nullspace_basis(flipped)


if __name__ == "__main__":
    import doctest

    doctest.testmod()
