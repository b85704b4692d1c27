"""Finite involutive rings with exhaustive, assumption-free witness oracles.

A FiniteRing carries full operation tables over integer element codes
0..size-1, an involution, and solvers that answer every defining-equation
system by brute force. Two families ship built in:

- ``Zn:<n>``   — integers mod n (n >= 2) with the identity involution;
- ``M<k>:Z<p>``— k-by-k matrices over the prime field Z_p with transpose,
                 elements coded row-major in base p.

Custom rings are accepted as operation tables (JSON) and validated against
the ring axioms (fully up to size 64, by seeded sampling beyond).

>>> ring = ring_build("Zn:6")
>>> sorted(ring.units)
[1, 5]
>>> ring.witness_set(2, InverseKind.WD).witnesses
(2, 5)
>>> ring_build("Zn:4").witness_set(2, InverseKind.WD).witnesses
()
"""

from __future__ import annotations

import random
import re as _re
from dataclasses import dataclass

from .engine import InverseKind

DEFAULT_CAP = 4096
DEFAULT_ROSTER = ("Zn:4", "Zn:5", "Zn:6", "Zn:8", "Zn:12", "M2:Z2")


class RingFormatError(ValueError):
    """Raised for malformed ring spec strings or table files."""


class TooLarge(ValueError):
    """Raised when a requested ring exceeds the element-count cap."""


class RingAxiomError(ValueError):
    """Raised when supplied operation tables violate the ring axioms."""


@dataclass(frozen=True)
class FiniteRingSpec:
    """A parsed ring description: family plus parameters."""

    family: str  # "Zn" | "MatZp"
    n: int = 0  # modulus for Zn
    k: int = 0  # matrix size for MatZp
    p: int = 0  # prime modulus for MatZp

    @property
    def text(self):
        if self.family == "Zn":
            return f"Zn:{self.n}"
        return f"M{self.k}:Z{self.p}"


@dataclass(frozen=True)
class WitnessSet:
    """All solutions of one defining system for one element, sorted by code."""

    kind: str
    element: int
    k_used: int
    witnesses: tuple

    def to_json(self):
        return {
            "kind": self.kind,
            "element": self.element,
            "k": self.k_used,
            "witnesses": list(self.witnesses),
        }


_ZN_RE = _re.compile(r"^Zn:(\d+)$")
_MAT_RE = _re.compile(r"^M(\d+):Z(\d+)$")


def _is_prime(p):
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


def parse_ring_spec(text):
    """Parse "Zn:<n>" or "M<k>:Z<p>" into a FiniteRingSpec.

    >>> parse_ring_spec("M2:Z2")
    FiniteRingSpec(family='MatZp', n=0, k=2, p=2)
    """
    if not isinstance(text, str):
        raise RingFormatError(f"ring spec must be a string, got {type(text).__name__}")
    m = _ZN_RE.match(text.strip())
    if m:
        n = int(m.group(1))
        if n < 2:
            raise RingFormatError(f"Zn requires n >= 2 (unity must differ from zero), got {n}")
        return FiniteRingSpec(family="Zn", n=n)
    m = _MAT_RE.match(text.strip())
    if m:
        k, p = int(m.group(1)), int(m.group(2))
        if k < 1:
            raise RingFormatError(f"matrix size must be >= 1, got {k}")
        if not _is_prime(p):
            raise RingFormatError(f"matrix ring modulus must be prime, got {p}")
        return FiniteRingSpec(family="MatZp", k=k, p=p)
    raise RingFormatError(
        f"unrecognized ring spec {text!r}; expected 'Zn:<n>' or 'M<k>:Z<p>'"
    )


class FiniteRing:
    """A finite ring given by total operation tables and an involution."""

    def __init__(self, name, add, mul, star, validate_tables=True, sample_seed=0):
        self.name = name
        self.size = len(add)
        self.add_table = add
        self.mul_table = mul
        self.star_table = star
        self._find_identities()
        if validate_tables:
            self._validate(sample_seed)
        self.neg_table = self._build_neg()
        self._witness_cache = {}
        self._k_cache = {}
        self._ann_cache = {}
        self._units = None
        self._commutative = None
        self._proper = None
        self._idempotents = None

    # -- construction ------------------------------------------------------

    def _find_identities(self):
        size = len(self.add_table)
        self.zero = next(
            (e for e in range(size) if all(self.add_table[e][x] == x for x in range(size))),
            None,
        )
        self.one = next(
            (
                e
                for e in range(size)
                if all(
                    self.mul_table[e][x] == x and self.mul_table[x][e] == x
                    for x in range(size)
                )
            ),
            None,
        )
        if self.zero is None:
            raise RingAxiomError("no additive identity found in the addition table")
        if self.one is None:
            raise RingAxiomError("no unity found in the multiplication table")
        if self.zero == self.one:
            raise RingAxiomError("unity equals zero: the zero ring is not accepted")

    def _build_neg(self):
        neg = []
        for a in range(self.size):
            b = next(
                (x for x in range(self.size) if self.add_table[a][x] == self.zero), None
            )
            if b is None:
                raise RingAxiomError(f"element {a} has no additive inverse")
            neg.append(b)
        return neg

    def _validate(self, sample_seed):
        size = len(self.add_table)
        for table, label in ((self.add_table, "addition"), (self.mul_table, "multiplication")):
            if len(table) != size or any(len(row) != size for row in table):
                raise RingAxiomError(f"{label} table is not {size}x{size}")
            if any(not (0 <= v < size) for row in table for v in row):
                raise RingAxiomError(f"{label} table contains out-of-range codes")
        if len(self.star_table) != size or any(
            not (0 <= v < size) for v in self.star_table
        ):
            raise RingAxiomError("involution table must list one in-range code per element")
        if size <= 64:
            triples = (
                (a, b, c) for a in range(size) for b in range(size) for c in range(size)
            )
        else:
            rng = random.Random(sample_seed)
            triples = (
                (rng.randrange(size), rng.randrange(size), rng.randrange(size))
                for _ in range(4000)
            )
        add, mul, star = self.add_table, self.mul_table, self.star_table
        for a, b, c in triples:
            if add[a][b] != add[b][a]:
                raise RingAxiomError(f"addition not commutative at ({a},{b})")
            if add[add[a][b]][c] != add[a][add[b][c]]:
                raise RingAxiomError(f"addition not associative at ({a},{b},{c})")
            if mul[mul[a][b]][c] != mul[a][mul[b][c]]:
                raise RingAxiomError(f"multiplication not associative at ({a},{b},{c})")
            if mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]]:
                raise RingAxiomError(f"left distributivity fails at ({a},{b},{c})")
            if mul[add[a][b]][c] != add[mul[a][c]][mul[b][c]]:
                raise RingAxiomError(f"right distributivity fails at ({a},{b},{c})")
            if star[add[a][b]] != add[star[a]][star[b]]:
                raise RingAxiomError(f"involution not additive at ({a},{b})")
            if star[mul[a][b]] != mul[star[b]][star[a]]:
                raise RingAxiomError(f"involution not an anti-isomorphism at ({a},{b})")
            if star[star[a]] != a:
                raise RingAxiomError(f"involution not self-inverse at {a}")

    # -- primitive operations ---------------------------------------------

    def add(self, a, b):
        return self.add_table[a][b]

    def mul(self, a, b):
        return self.mul_table[a][b]

    def star(self, a):
        return self.star_table[a]

    def neg(self, a):
        return self.neg_table[a]

    def sub(self, a, b):
        return self.add_table[a][self.neg_table[b]]

    def power(self, a, k):
        if k < 0:
            raise ValueError(f"ring power requires exponent >= 0, got {k}")
        result = self.one
        for _ in range(k):
            result = self.mul_table[result][a]
        return result

    def elements(self):
        return range(self.size)

    # -- cached structure --------------------------------------------------

    @property
    def is_commutative(self):
        if self._commutative is None:
            mul = self.mul_table
            self._commutative = all(
                mul[a][b] == mul[b][a]
                for a in range(self.size)
                for b in range(a + 1, self.size)
            )
        return self._commutative

    @property
    def units(self):
        if self._units is None:
            found = set()
            mul, one = self.mul_table, self.one
            for u in range(self.size):
                if any(
                    mul[u][v] == one and mul[v][u] == one for v in range(self.size)
                ):
                    found.add(u)
            self._units = frozenset(found)
        return self._units

    @property
    def proper(self):
        """True when star(a) * a == 0 forces a == 0."""
        if self._proper is None:
            self._proper = all(
                self.mul_table[self.star_table[a]][a] != self.zero
                for a in range(self.size)
                if a != self.zero
            )
        return self._proper

    def idempotents(self):
        if self._idempotents is None:
            self._idempotents = tuple(
                e for e in range(self.size) if self.mul_table[e][e] == e
            )
        return self._idempotents

    def nilpotent(self, a):
        p = a
        for _ in range(self.size):
            if p == self.zero:
                return True
            p = self.mul_table[p][a]
        return p == self.zero

    def k_used(self, a):
        """Minimal k >= 1 with a^k in a^(k+1)R intersect Ra^(k+1).

        Always exists in a finite ring (powers are eventually periodic).
        """
        if a in self._k_cache:
            return self._k_cache[a]
        mul = self.mul_table
        ak = a
        for k in range(1, self.size + 1):
            ak1 = mul[ak][a]
            right = any(mul[ak1][x] == ak for x in range(self.size))
            left = right and any(mul[x][ak1] == ak for x in range(self.size))
            if left:
                self._k_cache[a] = k
                return k
            ak = ak1
        raise AssertionError("power chain failed to stabilize (unreachable)")

    # -- witness oracles -----------------------------------------------------

    def witness_set(self, a, kind, k=None):
        """Exhaustively solve the defining system of ``kind`` for element a.

        k defaults to k_used(a); pass k explicitly (e.g. the ring size) for
        the fully stabilized set of a power-dependent kind.
        """
        if not isinstance(kind, InverseKind):
            raise ValueError(f"unknown inverse kind {kind!r}")
        cache_key = (a, kind, k)
        if cache_key in self._witness_cache:
            return self._witness_cache[cache_key]
        ku = self.k_used(a) if k is None else k
        if ku < 1:
            raise ValueError(f"power exponent must be >= 1, got {ku}")
        witnesses = tuple(
            x for x in range(self.size) if self._satisfies(a, x, kind, ku)
        )
        result = WitnessSet(kind.value, a, ku, witnesses)
        self._witness_cache[cache_key] = result
        return result

    def _satisfies(self, a, x, kind, k):
        mul, star = self.mul_table, self.star_table
        ak = self.power(a, k)
        ak1 = mul[ak][a]
        ax, xa = mul[a][x], mul[x][a]
        if kind is InverseKind.MP:
            return (
                mul[ax][a] == a
                and mul[x][ax] == x
                and star[ax] == ax
                and star[xa] == xa
            )
        if kind is InverseKind.DRAZIN:
            return mul[x][ak1] == ak and ax == xa and mul[ax][x] == x
        if kind is InverseKind.GROUP:
            a2 = mul[a][a]
            return mul[x][a2] == a and ax == xa and mul[ax][x] == x
        if kind is InverseKind.CORE:
            return star[ax] == ax and mul[ax][x] == x and mul[xa][a] == a
        if kind is InverseKind.PSEUDO_CORE:
            return star[ax] == ax and mul[ax][x] == x and mul[x][ak1] == ak
        if kind is InverseKind.RIGHT_PSEUDO_CORE:
            return mul[ax][ak] == ak and mul[ax][x] == x and star[ax] == ax
        if kind is InverseKind.DMP:
            d = self.drazin_of(a)
            m = self.mp_of(a)
            if d is None or m is None:
                return False
            return (
                mul[xa][x] == x
                and xa == mul[d][a]
                and mul[ak][x] == mul[ak][m]
            )
        if kind is InverseKind.WD:
            return mul[ax][a] == a and mul[ak1][x] == ak and mul[x][ak1] == ak
        if kind is InverseKind.WDMP:
            # The third defining equation references a wd witness w, but
            # w a^k = a^d a^k for every wd witness, so the set is witness-free;
            # it is empty whenever a has no wd inverse or no mp inverse.
            if not self.witness_set(a, InverseKind.WD).witnesses:
                return False
            d = self.drazin_of(a)
            m = self.mp_of(a)
            if d is None or m is None:
                return False
            return (
                mul[mul[x][a]][x] == x
                and mul[a][x] == mul[a][m]
                and mul[x][ak] == mul[d][ak]
            )
        if kind is InverseKind.INNER:
            return mul[ax][a] == a
        raise ValueError(f"unknown inverse kind {kind!r}")

    def drazin_of(self, a):
        """The Drazin inverse element, or None (unique when it exists)."""
        ws = self.witness_set(a, InverseKind.DRAZIN)
        return ws.witnesses[0] if ws.witnesses else None

    def mp_of(self, a):
        ws = self.witness_set(a, InverseKind.MP)
        return ws.witnesses[0] if ws.witnesses else None

    def group_of(self, a):
        ws = self.witness_set(a, InverseKind.GROUP)
        return ws.witnesses[0] if ws.witnesses else None

    def possesses(self, a, kind):
        return bool(self.witness_set(a, kind).witnesses)

    # -- commutants, annihilators, related predicates ----------------------

    def comm_set(self, a):
        mul = self.mul_table
        return tuple(x for x in range(self.size) if mul[a][x] == mul[x][a])

    def comm2_set(self, a):
        mul = self.mul_table
        commutant = self.comm_set(a)
        return tuple(
            x
            for x in range(self.size)
            if all(mul[x][y] == mul[y][x] for y in commutant)
        )

    def quasinilpotent_check(self, a):
        """True when 1 + x*a is a unit for every x commuting with a."""
        mul, add = self.mul_table, self.add_table
        units = self.units
        return all(
            add[self.one][mul[x][a]] in units for x in self.comm_set(a)
        )

    def hirano_witness_set(self, a):
        """All b with b = b*a*b, b in comm2(a), and a^2 - a*b quasinilpotent."""
        mul = self.mul_table
        comm2 = set(self.comm2_set(a))
        a2 = mul[a][a]
        witnesses = tuple(
            b
            for b in range(self.size)
            if mul[mul[b][a]][b] == b
            and b in comm2
            and self.quasinilpotent_check(self.sub(a2, mul[a][b]))
        )
        return WitnessSet("hirano", a, self.k_used(a), witnesses)

    def annihilators(self, a):
        """(left, right): all x with x*a == 0, respectively a*x == 0."""
        if a in self._ann_cache:
            return self._ann_cache[a]
        mul, zero = self.mul_table, self.zero
        left = tuple(x for x in range(self.size) if mul[x][a] == zero)
        right = tuple(x for x in range(self.size) if mul[a][x] == zero)
        self._ann_cache[a] = (left, right)
        return left, right

    def left_ann(self, a):
        return self.annihilators(a)[0]

    def right_ann(self, a):
        return self.annihilators(a)[1]

    def principal_right(self, a):
        mul = self.mul_table
        return frozenset(mul[a][x] for x in range(self.size))

    def principal_left(self, a):
        mul = self.mul_table
        return frozenset(mul[x][a] for x in range(self.size))

    def principal_inclusion(self, a, b, side):
        """aR subset of bR (side='right') or Ra subset of Rb (side='left')."""
        if side == "right":
            return self.principal_right(a) <= self.principal_right(b)
        if side == "left":
            return self.principal_left(a) <= self.principal_left(b)
        raise ValueError(f"side must be 'right' or 'left', got {side!r}")

    def __repr__(self):
        return f"FiniteRing({self.name!r}, size={self.size})"


def _build_zn(n):
    add = [[(i + j) % n for j in range(n)] for i in range(n)]
    mul = [[(i * j) % n for j in range(n)] for i in range(n)]
    star = list(range(n))
    return FiniteRing(f"Zn:{n}", add, mul, star, validate_tables=False)


def _build_mat_zp(k, p, cap):
    size = p ** (k * k)
    if size > cap:
        raise TooLarge(
            f"M{k}:Z{p} has {size} elements, above the cap of {cap}"
        )

    def decode(code):
        entries = []
        for _ in range(k * k):
            entries.append(code % p)
            code //= p
        return tuple(entries)  # row-major: entry (r, c) at index r*k + c

    def encode(entries):
        code = 0
        for v in reversed(entries):
            code = code * p + v
        return code

    mats = [decode(c) for c in range(size)]
    add = [
        [encode(tuple((x + y) % p for x, y in zip(mats[i], mats[j]))) for j in range(size)]
        for i in range(size)
    ]

    def mat_mul(m1, m2):
        out = []
        for r in range(k):
            for c in range(k):
                s = 0
                for t in range(k):
                    s += m1[r * k + t] * m2[t * k + c]
                out.append(s % p)
        return tuple(out)

    mul = [[encode(mat_mul(mats[i], mats[j])) for j in range(size)] for i in range(size)]
    star = [
        encode(tuple(mats[i][c * k + r] for r in range(k) for c in range(k)))
        for i in range(size)
    ]
    return FiniteRing(f"M{k}:Z{p}", add, mul, star, validate_tables=False)


def ring_build(spec, cap=DEFAULT_CAP):
    """Build a FiniteRing from a spec string or FiniteRingSpec.

    >>> ring_build("M2:Z2").size
    16
    """
    if isinstance(spec, str):
        spec = parse_ring_spec(spec)
    if spec.family == "Zn":
        if spec.n > cap:
            raise TooLarge(f"Zn:{spec.n} has {spec.n} elements, above the cap of {cap}")
        return _build_zn(spec.n)
    if spec.family == "MatZp":
        return _build_mat_zp(spec.k, spec.p, cap)
    raise RingFormatError(f"unknown ring family {spec.family!r}")


def ring_from_tables(data, cap=DEFAULT_CAP):
    """Build and validate a custom ring from a JSON-style table dict.

    Expected keys: "add", "mul", "star" (tables of element codes), optional
    "name". Axioms are checked exhaustively up to size 64 and by seeded
    sampling beyond.
    """
    if not isinstance(data, dict):
        raise RingFormatError("custom ring data must be a JSON object")
    missing = {"add", "mul", "star"} - set(data)
    if missing:
        raise RingFormatError(f"custom ring data missing keys: {sorted(missing)}")
    add, mul, star = data["add"], data["mul"], data["star"]
    if not isinstance(add, list) or not add:
        raise RingFormatError("addition table must be a non-empty list of rows")
    if len(add) > cap:
        raise TooLarge(f"custom ring has {len(add)} elements, above the cap of {cap}")
    return FiniteRing(
        str(data.get("name", "custom")), add, mul, star, validate_tables=True
    )


# Module-level wrappers mirroring the oracle's operation names.

def witness_set(ring, a, kind, k=None):
    return ring.witness_set(a, kind, k)


def comm_set(ring, a):
    return ring.comm_set(a)


def comm2_set(ring, a):
    return ring.comm2_set(a)


def quasinilpotent_check(ring, a):
    return ring.quasinilpotent_check(a)


def hirano_witness_set(ring, a):
    return ring.hirano_witness_set(a)


def annihilators(ring, a):
    return ring.annihilators(a)


def proper_check(ring):
    return ring.proper


def principal_inclusion(ring, a, b, side):
    return ring.principal_inclusion(a, b, side)


if __name__ == "__main__":
    import doctest

    doctest.testmod()
