"""Constructions and definition-checkers for generalized inverses of exact matrices.

Ten inverse kinds are supported. Each construction returns an InverseResult
whose value has been checked against the defining equations of its kind; a
construction that produced an unverified value would raise VerificationFailed
(which therefore indicates an internal bug, never bad user input).

The defining systems (k is the power exponent, a* the conjugate transpose):

- mp     : axa = a, xax = x, (ax)* = ax, (xa)* = xa
- d      : x a^(k+1) = a^k, ax = xa, a x^2 = x
- grp    : the d system at k = 1 (these equations imply axa = a)
- core   : (ax)* = ax, a x^2 = x, x a^2 = a
- pc     : (ax)* = ax, a x^2 = x, x a^(k+1) = a^k
- rpc    : a x a^k = a^k, a x^2 = x, (ax)* = ax
- dmp    : xax = x, xa = a^d a, a^k x = a^k a^mp
- wd     : axa = a, a^(k+1) x = a^k, x a^(k+1) = a^k
- wdmp   : xax = x, ax = a a^mp, x a^k = w a^k  (w: a chosen wd witness)
- inner  : axa = a

>>> a = ExactMatrix.from_rows([[1, 1], [0, 0]], "Q")
>>> mp_inverse(a).value.rows
((mpq(1,2), mpq(0,1)), (mpq(1,2), mpq(0,1)))
>>> verify_definition(InverseKind.MP, a, mp_inverse(a).value)
True
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum

from .matrices import (
    DimensionMismatch,
    ExactMatrix,
    conj_transpose_rect,
    drazin_index,
    inverse_matrix,
    mul_rect,
    nilpotent_check,
    rank_factorization,
)


class InverseKind(Enum):
    MP = "mp"
    DRAZIN = "d"
    GROUP = "grp"
    CORE = "core"
    PSEUDO_CORE = "pc"
    RIGHT_PSEUDO_CORE = "rpc"
    DMP = "dmp"
    WD = "wd"
    WDMP = "wdmp"
    INNER = "inner"


#: Kinds whose witness is unique whenever it exists.
UNIQUE_KINDS = (
    InverseKind.MP,
    InverseKind.DRAZIN,
    InverseKind.GROUP,
    InverseKind.CORE,
    InverseKind.PSEUDO_CORE,
    InverseKind.RIGHT_PSEUDO_CORE,
    InverseKind.DMP,
)


class MissingWitness(ValueError):
    """Raised when a wd witness is required (wdmp checks) but absent."""


class InvalidWitness(ValueError):
    """Raised when a supplied wd witness fails the wd equations."""


class IndexTooLarge(ValueError):
    """Raised for group/core inverses of a matrix with index above 1."""


class VerificationFailed(RuntimeError):
    """A construction produced a value that fails its defining equations."""


@dataclass(frozen=True)
class InverseResult:
    """A verified inverse: the kind, the exponent used, and the value."""

    kind: InverseKind
    k: int
    value: ExactMatrix
    witness_wd: ExactMatrix | None = None

    def to_json(self):
        data = {
            "kind": self.kind.value,
            "k": self.k,
            "value": self.value.to_json(),
            "verified": True,
        }
        if self.witness_wd is not None:
            data["witness_wd"] = self.witness_wd.to_json()
        return data


def k_used(a):
    """The exponent every power-based system is checked at: max(index, 1)."""
    return max(drazin_index(a).index, 1)


def verify_definition(kind, a, x, k=None, witness=None):
    """Check the defining equations of ``kind`` for candidate x, exactly.

    k defaults to max(index(a), 1). For WDMP a wd witness must be supplied
    (MissingWitness otherwise); it is validated against the wd equations
    first (InvalidWitness).

    >>> a = ExactMatrix.from_rows([[0, 1], [0, 0]], "Q")
    >>> verify_definition(InverseKind.INNER, a, a.conj_transpose())
    True
    >>> verify_definition(InverseKind.MP, a, a)
    False
    """
    if not isinstance(kind, InverseKind):
        raise ValueError(f"unknown inverse kind {kind!r}")
    if not isinstance(a, ExactMatrix) or not isinstance(x, ExactMatrix):
        raise DimensionMismatch("verify_definition expects ExactMatrix operands")
    if a.n != x.n or a.field != x.field:
        raise DimensionMismatch(
            f"candidate shape {x.n}x{x.n}/{x.field} does not match "
            f"{a.n}x{a.n}/{a.field}"
        )
    if k is None:
        k = k_used(a)
    if k < 1:
        raise ValueError(f"power exponent must be >= 1, got {k}")

    if kind is InverseKind.MP:
        ax, xa = a * x, x * a
        return (
            ax * a == a
            and x * ax == x
            and ax.conj_transpose() == ax
            and xa.conj_transpose() == xa
        )
    if kind is InverseKind.DRAZIN or kind is InverseKind.GROUP:
        if kind is InverseKind.GROUP:
            k = 1
        ak = a.power(k)
        return x * ak * a == ak and a * x == x * a and a * x * x == x
    if kind is InverseKind.CORE:
        ax = a * x
        return ax.conj_transpose() == ax and ax * x == x and x * a * a == a
    if kind is InverseKind.PSEUDO_CORE:
        ax = a * x
        ak = a.power(k)
        return ax.conj_transpose() == ax and ax * x == x and x * ak * a == ak
    if kind is InverseKind.RIGHT_PSEUDO_CORE:
        ax = a * x
        ak = a.power(k)
        return ax * ak == ak and ax * x == x and ax.conj_transpose() == ax
    if kind is InverseKind.DMP:
        d = drazin_inverse(a).value
        m = mp_inverse(a).value
        ak = a.power(k)
        return x * a * x == x and x * a == d * a and ak * x == ak * m
    if kind is InverseKind.WD:
        ak = a.power(k)
        return a * x * a == a and a * ak * x == ak and x * ak * a == ak
    if kind is InverseKind.WDMP:
        if witness is None:
            raise MissingWitness("wdmp verification requires a wd witness")
        if not verify_definition(InverseKind.WD, a, witness, k):
            raise InvalidWitness("supplied witness fails the wd equations")
        ak = a.power(k)
        m = mp_inverse(a).value
        return x * a * x == x and a * x == a * m and x * ak == witness * ak
    if kind is InverseKind.INNER:
        return a * x * a == a
    raise ValueError(f"unknown inverse kind {kind!r}")


def _gate(kind, a, x, k=None, witness=None):
    if not verify_definition(kind, a, x, k, witness):
        raise VerificationFailed(
            f"construction for {kind.value} produced a value failing its equations"
        )


def mp_inverse(a):
    """Moore-Penrose inverse via full-rank factorization.

    With a = F G, the inverse is G* (F* a G*)^(-1) F*; the middle factor is an
    invertible Gram-type r-by-r matrix. The zero matrix maps to zero.

    >>> mp_inverse(ExactMatrix.zeros(2, "Q")).value.is_zero()
    True
    """
    if a.is_zero():
        x = ExactMatrix.zeros(a.n, a.field)
    else:
        F, G = rank_factorization(a)
        f_star = conj_transpose_rect(F)
        g_star = conj_transpose_rect(G)
        middle = mul_rect(mul_rect(f_star, a.rows, a.field), g_star, a.field)
        r = len(middle)
        middle_inv = inverse_matrix(ExactMatrix(r, a.field, middle))
        x_rows = mul_rect(mul_rect(g_star, middle_inv.rows, a.field), f_star, a.field)
        x = ExactMatrix(a.n, a.field, x_rows)
    _gate(InverseKind.MP, a, x)
    return InverseResult(InverseKind.MP, 1, x)


def drazin_inverse(a):
    """Drazin inverse via the power construction a^k (a^(2k+1))^mp a^k."""
    k = k_used(a)
    core = mp_inverse(a.power(2 * k + 1)).value
    x = a.power(k) * core * a.power(k)
    _gate(InverseKind.DRAZIN, a, x, k)
    return InverseResult(InverseKind.DRAZIN, k, x)


def group_inverse(a):
    """Group inverse: the Drazin inverse when the index is at most 1."""
    idx = drazin_index(a).index
    if idx > 1:
        raise IndexTooLarge(f"group inverse requires index <= 1, got index {idx}")
    x = drazin_inverse(a).value
    _gate(InverseKind.GROUP, a, x, 1)
    return InverseResult(InverseKind.GROUP, 1, x)


def core_inverse(a):
    """Core inverse a^grp a a^mp (index at most 1)."""
    idx = drazin_index(a).index
    if idx > 1:
        raise IndexTooLarge(f"core inverse requires index <= 1, got index {idx}")
    x = group_inverse(a).value * a * mp_inverse(a).value
    _gate(InverseKind.CORE, a, x, 1)
    return InverseResult(InverseKind.CORE, 1, x)


def pseudo_core_inverse(a):
    """Pseudo core inverse a^d a^k (a^k)^mp."""
    k = k_used(a)
    ak = a.power(k)
    x = drazin_inverse(a).value * ak * mp_inverse(ak).value
    _gate(InverseKind.PSEUDO_CORE, a, x, k)
    return InverseResult(InverseKind.PSEUDO_CORE, k, x)


def right_pseudo_core_inverse(a):
    """Right pseudo core inverse; same construction, checked against its system."""
    k = k_used(a)
    ak = a.power(k)
    x = drazin_inverse(a).value * ak * mp_inverse(ak).value
    _gate(InverseKind.RIGHT_PSEUDO_CORE, a, x, k)
    return InverseResult(InverseKind.RIGHT_PSEUDO_CORE, k, x)


def dmp_inverse(a):
    """DMP inverse a^d a a^mp."""
    k = k_used(a)
    x = drazin_inverse(a).value * a * mp_inverse(a).value
    _gate(InverseKind.DMP, a, x, k)
    return InverseResult(InverseKind.DMP, k, x)


def _wd_parts(a):
    """Shared pieces of the weak Drazin constructions.

    Returns (k, d, e, nil_part, nil_mp) where e = 1 - a a^d projects onto the
    nilpotent summand and nil_part = a - a^2 a^d is that summand.
    """
    k = k_used(a)
    d = drazin_inverse(a).value
    ident = ExactMatrix.identity(a.n, a.field)
    e = ident - a * d
    nil_part = a - a * a * d
    nil_mp = mp_inverse(nil_part).value
    return k, d, e, nil_part, nil_mp


def wd_canonical(a):
    """The canonical weak Drazin inverse a^d + (1-aa^d) N^mp (1-aa^d), N = a-a^2 a^d.

    This particular witness is also reflexive (x a x = x).
    """
    k, d, e, _, nil_mp = _wd_parts(a)
    x = d + e * nil_mp * e
    _gate(InverseKind.WD, a, x, k)
    return InverseResult(InverseKind.WD, k, x)


def wd_family_sample(a, seed, count):
    """A deterministic family of verified weak Drazin witnesses.

    Varies the inner inverse of the nilpotent part: for any Z the value
    N^mp + Z - N^mp N Z N N^mp is an inner inverse of N, so every sample
    passes the wd equations. Returns exactly ``count`` verified results,
    distinct where the family admits distinct members (an invertible matrix,
    for instance, has the single witness a^(-1), so samples repeat).
    """
    if count < 1:
        raise ValueError(f"sample count must be >= 1, got {count}")
    k, d, e, nil_part, nil_mp = _wd_parts(a)
    rng = random.Random(seed)
    samples = []
    seen = set()

    def push(x):
        _gate(InverseKind.WD, a, x, k)
        if x not in seen:
            seen.add(x)
            samples.append(x)

    push(d + e * nil_mp * e)
    tries = 0
    while len(samples) < count and tries < 10 * count:
        tries += 1
        z = ExactMatrix.from_rows(
            [[rng.randrange(-2, 3) for _ in range(a.n)] for _ in range(a.n)],
            a.field,
        )
        inner = nil_mp + z - nil_mp * nil_part * z * nil_part * nil_mp
        push(d + e * inner * e)
    while len(samples) < count:
        samples.append(samples[len(samples) % len(seen)])
    return [InverseResult(InverseKind.WD, k, x) for x in samples[:count]]


def wdmp_inverse(a, witness=None):
    """WDMP inverse w a a^mp for a wd witness w (canonical one by default).

    A supplied witness is validated against the wd equations first
    (InvalidWitness on failure). The witness used is recorded on the result.
    """
    k = k_used(a)
    if witness is None:
        witness = wd_canonical(a).value
    elif not verify_definition(InverseKind.WD, a, witness, k):
        raise InvalidWitness("supplied witness fails the wd equations")
    x = witness * a * mp_inverse(a).value
    _gate(InverseKind.WDMP, a, x, k, witness)
    return InverseResult(InverseKind.WDMP, k, x, witness_wd=witness)


def is_ep(a):
    """True when a commutes with its Moore-Penrose inverse."""
    m = mp_inverse(a).value
    return a * m == m * a


def hirano_invertible(a):
    """True when a - a^3 is nilpotent."""
    return nilpotent_check(a - a.power(3))


if __name__ == "__main__":
    import doctest

    doctest.testmod()
