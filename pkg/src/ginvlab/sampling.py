"""Seeded exact-matrix samplers for law checking and construction sweeps.

Uniform random matrices almost never satisfy structural hypotheses
(commutativity, mutual orthogonality, Hermitian idempotence), which would
make hypothesized laws pass vacuously in sampled mode. The samplers here
plant structure exactly:

- unitary conjugation by rational Cayley transforms Q = (1-S)(1+S)^(-1)
  (S skew, so Q*Q = 1 exactly) keeps Hermitian/EP/orthogonality structure
  while hiding it from the entry pattern;
- unimodular integer shear products give exact similarity transforms;
- planted-rank products F G and planted-index Jordan seeds pin the rank
  and Drazin index in advance.

>>> import random
>>> q = cayley_unitary(random.Random(3), 4, "Q")
>>> q * q.conj_transpose() == ExactMatrix.identity(4, "Q")
True
>>> a, b = orthogonal_tuple(random.Random(5), 4, "Q", 2, 0)
>>> (a * b).is_zero() and (b * a).is_zero()
True
>>> (a.conj_transpose() * b).is_zero() and (a * b.conj_transpose()).is_zero()
True
"""

from __future__ import annotations

import random
import re

from .matrices import ExactMatrix, inverse_matrix
from .scalars import FIELD_GAUSSIAN, FIELD_RATIONAL, FIELDS, GaussianRational

_MATRIX_SPEC_RE = re.compile(r"^(\d+):(Q(?:\(i\))?)$")
MAX_SAMPLED_DIMENSION = 6


class MatrixSpecError(ValueError):
    """A malformed or out-of-range matrix carrier spec."""


def parse_matrix_spec(text):
    """Parse a matrix carrier spec "n:field", e.g. "4:Q" or "3:Q(i)".

    >>> parse_matrix_spec("4:Q")
    (4, 'Q')
    >>> parse_matrix_spec("2:Q(i)")
    (2, 'Q(i)')
    """
    m = _MATRIX_SPEC_RE.match(text.strip())
    if not m:
        raise MatrixSpecError(
            f"matrix spec must look like 'n:Q' or 'n:Q(i)', got {text!r}"
        )
    n, field = int(m.group(1)), m.group(2)
    if field not in FIELDS:
        raise MatrixSpecError(f"unknown field {field!r}")
    if not 1 <= n <= MAX_SAMPLED_DIMENSION:
        raise MatrixSpecError(
            f"dimension must be between 1 and {MAX_SAMPLED_DIMENSION}, got {n}"
        )
    return n, field


# -- scalar and matrix draws ---------------------------------------------------


def _entry(rng, field, fractions=False):
    def part():
        num = rng.randrange(-3, 4)
        if fractions and rng.randrange(3) == 0:
            return f"{num}/{rng.randrange(2, 4)}"
        return str(num)

    if field == FIELD_GAUSSIAN:
        re_part, im_part = part(), part()
        sign = "" if im_part.startswith("-") else "+"
        return f"{re_part}{sign}{im_part}*i"
    return part()


def random_matrix(rng, n, field, fractions=False):
    """A dense matrix with small integer (optionally fractional) entries."""
    return ExactMatrix.from_rows(
        [[_entry(rng, field, fractions) for _ in range(n)] for _ in range(n)],
        field,
    )


def unimodular_matrix(rng, n, field):
    """An integer shear product: exactly invertible with integer inverse."""
    rows = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for _ in range(2 * n):
        i, j = rng.randrange(n), rng.randrange(n)
        if i == j:
            continue
        c = rng.choice((-2, -1, 1, 2))
        rows[i] = [x + c * y for x, y in zip(rows[i], rows[j])]
    return ExactMatrix.from_rows(rows, field)


def cayley_unitary(rng, n, field):
    """An exactly unitary matrix (1-S)(1+S)^(-1) from a random skew S.

    Over Q the seed S is skew-symmetric; over Q(i) it is skew-Hermitian
    (A + iB with A skew, B symmetric). In both cases 1+S is provably
    invertible over exact rationals, so this never fails.
    """
    a = [[0] * n for _ in range(n)]
    b = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            a[i][j] = rng.randrange(-2, 3)
            a[j][i] = -a[i][j]
            b[i][j] = b[j][i] = rng.randrange(-2, 3)
    for i in range(n):
        b[i][i] = rng.randrange(-2, 3)
    if field == FIELD_GAUSSIAN:
        entries = [
            [GaussianRational(a[i][j], b[i][j]) for j in range(n)] for i in range(n)
        ]
    else:
        entries = a
    s = ExactMatrix.from_rows(entries, field)
    ident = ExactMatrix.identity(n, field)
    return (ident - s) * inverse_matrix(ident + s)


def _embed_block(block, n, field, offset):
    """Place a small square block on the diagonal of an n-by-n zero matrix."""
    rows = [[0] * n for _ in range(n)]
    out = ExactMatrix.zeros(n, field)
    entries = [list(row) for row in out.rows]
    for i in range(block.n):
        for j in range(block.n):
            entries[offset + i][offset + j] = block.rows[i][j]
    del rows
    return ExactMatrix(n, field, tuple(tuple(row) for row in entries))


def planted_rank_matrix(rng, n, field, r):
    """A matrix of exact rank r built as a full-rank tall–wide product.

    The tall factor is unit lower triangular in its first r columns and the
    wide factor unit upper triangular in its first r rows, so both have full
    rank r by construction and the product has rank exactly r.
    """
    if r == 0:
        return ExactMatrix.zeros(n, field)
    left = [[0] * n for _ in range(n)]
    right = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(r):
            if i == j:
                left[i][j] = right[j][i] = 1
            elif i > j:
                left[i][j] = rng.randrange(-2, 3)
                right[j][i] = rng.randrange(-2, 3)
    f = ExactMatrix.from_rows(left, field)
    g = ExactMatrix.from_rows(right, field)
    return f * g


def shift_nilpotent(n, field, k):
    """The k-step shift block padded to size n: index exactly k."""
    rows = [[1 if j == i + 1 and j < k else 0 for j in range(n)] for i in range(n)]
    return ExactMatrix.from_rows(rows, field)


def planted_index_matrix(rng, n, field, k):
    """A matrix with Drazin index exactly k (1 <= k <= n).

    Conjugates (invertible block) + (k-step shift) by a unimodular matrix,
    so the index survives the similarity exactly.
    """
    if not 1 <= k <= n:
        raise ValueError(f"index must satisfy 1 <= k <= {n}, got {k}")
    core = unimodular_matrix(rng, n - k, field) if n > k else None
    rows = [[0] * n for _ in range(n)]
    if core is not None:
        for i in range(n - k):
            for j in range(n - k):
                rows[i][j] = core.rows[i][j]
    for i in range(k - 1):
        rows[n - k + i][n - k + i + 1] = 1
    seed_matrix = ExactMatrix.from_rows(rows, field)
    t = unimodular_matrix(rng, n, field)
    return t * seed_matrix * inverse_matrix(t)


def nilpotent_matrix(rng, n, field):
    """A similarity-hidden strictly upper-triangular matrix."""
    rows = [
        [rng.randrange(-2, 3) if j > i else 0 for j in range(n)] for i in range(n)
    ]
    t = unimodular_matrix(rng, n, field)
    return t * ExactMatrix.from_rows(rows, field) * inverse_matrix(t)


def idempotent_matrix(rng, n, field, r):
    """A rank-r idempotent T (1_r + 0) T^(-1)."""
    t = unimodular_matrix(rng, n, field)
    rows = [[1 if i == j and i < r else 0 for j in range(n)] for i in range(n)]
    return t * ExactMatrix.from_rows(rows, field) * inverse_matrix(t)


def hermitian_matrix(rng, n, field):
    """A random Hermitian matrix a + a^*."""
    a = random_matrix(rng, n, field)
    return a + a.conj_transpose()


def hermitian_projector(rng, n, field, r):
    """A Hermitian idempotent of rank r: Q (1_r + 0) Q^* with Q unitary."""
    q = cayley_unitary(rng, n, field)
    rows = [[1 if i == j and i < r else 0 for j in range(n)] for i in range(n)]
    return q * ExactMatrix.from_rows(rows, field) * q.conj_transpose()


def ep_matrix(rng, n, field, r):
    """A rank-r matrix with matching column space for a and a^*.

    Built as Q (C + 0) Q^* with C invertible and Q unitary, so a a^mp and
    a^mp a are both the projector onto the first r Q-columns.
    """
    q = cayley_unitary(rng, n, field)
    block = _embed_block(unimodular_matrix(rng, r, field), n, field, 0) if r else (
        ExactMatrix.zeros(n, field)
    )
    return q * block * q.conj_transpose()


def variety_pool(n, field, seed, count):
    """A deterministic mixed pool: dense, low-rank, high-index, structured.

    Cycles through matrix varieties so every construction edge case (zero,
    nilpotent, idempotent, Hermitian, EP, fixed index, fractional entries)
    appears in every pool.

    >>> pool = variety_pool(3, "Q", seed=1, count=12)
    >>> len(pool), pool[0].is_zero()
    (12, True)
    """
    rng = random.Random(seed)
    pool = []
    for i in range(count):
        variant = i % 10
        if variant == 0 and i == 0:
            pool.append(ExactMatrix.zeros(n, field))
        elif variant == 0:
            pool.append(random_matrix(rng, n, field, fractions=True))
        elif variant == 1:
            pool.append(random_matrix(rng, n, field))
        elif variant == 2:
            pool.append(planted_rank_matrix(rng, n, field, rng.randrange(n + 1)))
        elif variant == 3:
            pool.append(planted_index_matrix(rng, n, field, rng.randrange(1, n + 1)))
        elif variant == 4:
            pool.append(nilpotent_matrix(rng, n, field))
        elif variant == 5:
            pool.append(idempotent_matrix(rng, n, field, rng.randrange(n + 1)))
        elif variant == 6:
            pool.append(hermitian_matrix(rng, n, field))
        elif variant == 7:
            pool.append(ep_matrix(rng, n, field, rng.randrange(n + 1)))
        elif variant == 8:
            pool.append(hermitian_projector(rng, n, field, rng.randrange(n + 1)))
        else:
            pool.append(unimodular_matrix(rng, n, field))
    return pool


# -- tuple strategies (one binding per call) -----------------------------------


def mixed_tuple(rng, n, field, m, index):
    """m independent draws from the mixed variety cycle."""
    out = []
    for j in range(m):
        variant = (index + j) % 5
        if variant == 0:
            out.append(random_matrix(rng, n, field))
        elif variant == 1:
            out.append(planted_rank_matrix(rng, n, field, rng.randrange(n + 1)))
        elif variant == 2:
            out.append(planted_index_matrix(rng, n, field, rng.randrange(1, n + 1)))
        elif variant == 3:
            out.append(hermitian_matrix(rng, n, field))
        else:
            out.append(ep_matrix(rng, n, field, rng.randrange(n + 1)))
    return tuple(out)


def _segments(rng, n, m):
    """Split n diagonal slots into m disjoint (possibly empty) segments."""
    cuts = sorted(rng.randrange(n + 1) for _ in range(m - 1)) if m > 1 else []
    bounds = [0] + cuts + [n]
    return [(bounds[i], bounds[i + 1] - bounds[i]) for i in range(m)]


def orthogonal_tuple(rng, n, field, m, index, hermitian=False):
    """m mutually annihilating matrices: a_i a_j = a_i^* a_j = a_i a_j^* = 0.

    Each matrix lives on its own diagonal segment of a shared unitary frame,
    so all four orthogonality products vanish exactly and canonical inverse
    witnesses stay segment-confined.
    """
    q = cayley_unitary(rng, n, field)
    out = []
    for offset, size in _segments(rng, n, m):
        if size == 0:
            block = ExactMatrix.zeros(n, field)
        else:
            small = random_matrix(rng, size, field)
            if hermitian:
                small = small + small.conj_transpose()
            block = _embed_block(small, n, field, offset)
        out.append(q * block * q.conj_transpose())
    return tuple(out)


def orthogonal_hermitian_tuple(rng, n, field, m, index):
    return orthogonal_tuple(rng, n, field, m, index, hermitian=True)


def commuting_tuple(rng, n, field, m, index):
    """m simultaneously diagonal matrices in a shared unitary frame."""
    q = cayley_unitary(rng, n, field)
    qc = q.conj_transpose()
    out = []
    for _ in range(m):
        d = ExactMatrix.from_rows(
            [
                [rng.randrange(-2, 3) if i == j else 0 for j in range(n)]
                for i in range(n)
            ],
            field,
        )
        out.append(q * d * qc)
    return tuple(out)


def commuting_projector_tuple(rng, n, field, m, index):
    """m commuting Hermitian idempotents (0/1 diagonals, shared frame)."""
    q = cayley_unitary(rng, n, field)
    qc = q.conj_transpose()
    out = []
    for _ in range(m):
        d = ExactMatrix.from_rows(
            [
                [rng.randrange(2) if i == j else 0 for j in range(n)]
                for i in range(n)
            ],
            field,
        )
        out.append(q * d * qc)
    return tuple(out)


def hermitian_tuple(rng, n, field, m, index):
    return tuple(hermitian_matrix(rng, n, field) for _ in range(m))


def equal_tuple(rng, n, field, m, index):
    a = mixed_tuple(rng, n, field, 1, index)[0]
    return tuple(a for _ in range(m))


def ep_tuple(rng, n, field, m, index):
    return tuple(ep_matrix(rng, n, field, rng.randrange(n + 1)) for _ in range(m))


STRATEGIES = {
    "mixed": mixed_tuple,
    "orthogonal": orthogonal_tuple,
    "orthogonal_hermitian": orthogonal_hermitian_tuple,
    "commuting": commuting_tuple,
    "commuting_projectors": commuting_projector_tuple,
    "hermitian": hermitian_tuple,
    "equal": equal_tuple,
    "ep": ep_tuple,
}


class MatrixSampler:
    """A seeded binding source for sampled-mode law evaluation.

    >>> s = MatrixSampler(3, "Q", seed=2, strategy="commuting")
    >>> bs = s.bindings(("a", "b"), 4)
    >>> all(b["a"] * b["b"] == b["b"] * b["a"] for b in bs)
    True
    """

    def __init__(self, dimension, field, seed=0, strategy="mixed", witness_samples=3):
        from .laws import _MatrixAlgebra

        if field not in FIELDS:
            raise MatrixSpecError(f"unknown field {field!r}")
        if strategy not in STRATEGIES:
            raise MatrixSpecError(
                f"unknown strategy {strategy!r}; choose from "
                f"{sorted(STRATEGIES)}"
            )
        self.dimension = dimension
        self.field = field
        self.seed = seed
        self.strategy = strategy
        self.algebra = _MatrixAlgebra(
            seed, witness_samples, dimension=dimension, field=field
        )

    def describe(self):
        return {
            "type": "matrix",
            "dimension": self.dimension,
            "field": self.field,
            "strategy": self.strategy,
        }

    def bindings(self, variables, count):
        rng = random.Random(self.seed)
        fn = STRATEGIES[self.strategy]
        out = []
        for i in range(count):
            mats = fn(rng, self.dimension, self.field, len(variables), i)
            out.append(dict(zip(variables, mats)))
        return out


if __name__ == "__main__":
    import doctest

    doctest.testmod()
