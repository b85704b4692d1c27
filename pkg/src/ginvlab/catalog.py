"""A fixed catalog of named claims, each bound to an executable checker.

Every entry runs on two carrier families: finite rings (exhaustive
quantification) and exact matrices (seeded sampling). Entries are either
backed by a law file evaluated through the law engine, or by a native
procedure for claims the law language cannot express (set equalities,
annihilator inclusions, biconditionals, existence transfers).

>>> row = run_theorem("WD-IDEMP", "Zn:5")
>>> row["status"], row["bindings_checked"]
('pass', 2)
>>> run_theorem("NOPE", "Zn:5")  # doctest: +IGNORE_EXCEPTION_DETAIL
Traceback (most recent call last):
    ...
UnknownTheorem: unknown theorem id 'NOPE'
>>> run_all([])["failures"]
0
"""

import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from importlib import resources

from ._version import __version__
from .engine import (
    IndexTooLarge,
    InverseKind,
    dmp_inverse,
    drazin_inverse,
    group_inverse,
    hirano_invertible,
    is_ep,
    k_used,
    mp_inverse,
    right_pseudo_core_inverse,
    verify_definition,
    wd_canonical,
    wd_family_sample,
)
from .laws import _thread_count, evaluate_law, parse_law
from .matrices import (
    ExactMatrix,
    drazin_index,
    left_nullspace_basis,
    nilpotent_check,
    nullspace_basis,
    range_included,
    row_space_equal,
    row_space_included,
)
from .rings import FiniteRing, RingFormatError, ring_build
from .sampling import (
    MatrixSampler,
    MatrixSpecError,
    ep_matrix,
    idempotent_matrix,
    parse_matrix_spec,
    random_matrix,
    unimodular_matrix,
    variety_pool,
)
from .scalars import scalar_zero

DEFAULT_RING_ROSTER = ("Zn:4", "Zn:5", "Zn:6", "Zn:8", "Zn:12", "M2:Z2")
DEFAULT_MATRIX_ROSTER = ("3:Q", "2:Q(i)")
DEFAULT_ROSTER = DEFAULT_RING_ROSTER + DEFAULT_MATRIX_ROSTER


class UnknownTheorem(LookupError):
    """Raised when a theorem id is not in the catalog."""


class InapplicableCarrier(ValueError):
    """Raised when an entry does not support the requested carrier family."""


@dataclass(frozen=True)
class TheoremEntry:
    """One catalog row: a named claim bound to an executable checker.

    checker is "law:<file>" (law-engine backed) or "native:<name>" (registered
    procedure); expected records whether the claim asserts identities
    ("holds") or constructs verified witnesses ("produces-witnesses");
    strategy names the matrix sampling scheme that makes hypotheses
    satisfiable rather than vacuous; proof_elided marks claims whose failures
    on a non-proper star-ring carrier must be flagged as a possible missing
    properness hypothesis.
    """

    id: str
    title: str
    claim: str
    carriers: tuple
    checker: str
    expected: str
    strategy: str = "mixed"
    proof_elided: bool = False


# -- shared algebra adapters -----------------------------------------------------


class _RingOps:
    """Uniform operation surface so one claim body serves both carriers."""

    def __init__(self, ring):
        self.mul = ring.mul
        self.add = ring.add
        self.sub = ring.sub
        self.star = ring.star
        self.power = ring.power
        self.one = ring.one
        self.zero = ring.zero


class _MatrixOps:
    def __init__(self, n, field):
        self.one = ExactMatrix.identity(n, field)
        self.zero = ExactMatrix.zeros(n, field)

    @staticmethod
    def mul(x, y):
        return x * y

    @staticmethod
    def add(x, y):
        return x + y

    @staticmethod
    def sub(x, y):
        return x - y

    @staticmethod
    def star(x):
        return x.conj_transpose()

    @staticmethod
    def power(x, k):
        return x.power(k)


class _RingIdeals:
    """Principal-ideal and annihilator predicates over a finite ring."""

    def __init__(self, ring):
        self.ring = ring
        self._lann = {}
        self._rann = {}

    def _l(self, x):
        if x not in self._lann:
            self._lann[x] = frozenset(self.ring.left_ann(x))
        return self._lann[x]

    def _r(self, x):
        if x not in self._rann:
            self._rann[x] = frozenset(self.ring.right_ann(x))
        return self._rann[x]

    def right_incl(self, x, y):
        return self.ring.principal_inclusion(x, y, "right")

    def right_eq(self, x, y):
        return self.ring.principal_right(x) == self.ring.principal_right(y)

    def left_incl(self, x, y):
        return self.ring.principal_inclusion(x, y, "left")

    def left_eq(self, x, y):
        return self.ring.principal_left(x) == self.ring.principal_left(y)

    def lann_incl(self, x, y):
        return self._l(x) <= self._l(y)

    def lann_eq(self, x, y):
        return self._l(x) == self._l(y)

    def rann_incl(self, x, y):
        return self._r(x) <= self._r(y)

    def rann_eq(self, x, y):
        return self._r(x) == self._r(y)


class _MatrixIdeals:
    """The same predicates for matrices over a field.

    Over a field xR in yR means col(x) in col(y), Rx in Ry means
    row(x) in row(y), and annihilator inclusions invert the span
    inclusions: lann(x) in lann(y) holds exactly when col(y) in col(x),
    rann(x) in rann(y) exactly when row(y) in row(x).
    """

    @staticmethod
    def right_incl(x, y):
        return range_included(x, y)

    @staticmethod
    def right_eq(x, y):
        return range_included(x, y) and range_included(y, x)

    @staticmethod
    def left_incl(x, y):
        return row_space_included(x, y)

    @staticmethod
    def left_eq(x, y):
        return row_space_equal(x, y)

    @staticmethod
    def lann_incl(x, y):
        return range_included(y, x)

    @staticmethod
    def lann_eq(x, y):
        return range_included(y, x) and range_included(x, y)

    @staticmethod
    def rann_incl(x, y):
        return row_space_included(y, x)

    @staticmethod
    def rann_eq(x, y):
        return row_space_equal(y, x)


# -- recorder --------------------------------------------------------------------


def _jsonable(value):
    return value.to_json() if isinstance(value, ExactMatrix) else value


class _Recorder:
    """Counts claim instances and stores up to ``budget`` counterexamples."""

    def __init__(self, budget):
        self.budget = budget
        self.checked = 0
        self.failures = 0
        self.records = []

    def check(self, ok, claim, variables, witnesses=None):
        self.checked += 1
        if ok:
            return
        self.failures += 1
        if len(self.records) < self.budget:
            self.records.append(
                {
                    "variables": {k: _jsonable(v) for k, v in variables.items()},
                    "witnesses": {
                        k: _jsonable(v) for k, v in (witnesses or {}).items()
                    },
                    "claim": claim,
                }
            )


# -- matrix-side witness helpers -------------------------------------------------


def _wd_samples(a, seed, count=3):
    """Distinct wd witness values for a (canonical first)."""
    return list(dict.fromkeys(res.value for res in wd_family_sample(a, seed, count)))


def _tied_wdmp(a, witnesses, m):
    """Distinct wdmp solutions w a a^mp obtained from the given wd witnesses."""
    out = []
    for w in witnesses:
        y = w * a * m
        if y not in out:
            out.append(y)
    return out


def _wdmp_member(target, candidate):
    """Witness-free wdmp membership: y t y = y, t y = t t^mp, y t^k = t^d t^k."""
    k = k_used(target)
    d = drazin_inverse(target).value
    m = mp_inverse(target).value
    tk = target.power(k)
    return (
        candidate * target * candidate == candidate
        and target * candidate == target * m
        and candidate * tk == d * tk
    )


def _vm_zero(v, m):
    """Row vector times matrix is zero."""
    zero = scalar_zero(m.field)
    return all(
        sum((v[i] * m.rows[i][j] for i in range(m.n)), zero) == zero
        for j in range(m.n)
    )


def _mv_zero(m, v):
    """Matrix times column vector is zero."""
    zero = scalar_zero(m.field)
    return all(
        sum((m.rows[i][j] * v[j] for j in range(m.n)), zero) == zero
        for i in range(m.n)
    )


# -- shared claim bodies ----------------------------------------------------------


def _ep_eq_ok(ops, a, m, g):
    ep = ops.mul(a, m) == ops.mul(m, a)
    c1 = any(
        ops.mul(ops.power(a, n), m) == ops.mul(m, ops.power(a, n)) for n in (1, 2, 3)
    )
    c2 = any(
        ops.mul(ops.power(g, n), m) == ops.mul(m, ops.power(g, n)) for n in (1, 2, 3)
    )
    c3 = any(ops.power(m, n) == ops.power(g, n) for n in (1, 2, 3))
    return ep == c1 == c2 == c3


def _proj_ok(ops, a, w, ak):
    aw = ops.mul(a, w)
    wa = ops.mul(w, a)
    p = ops.sub(ops.one, aw)
    q = ops.sub(ops.one, wa)
    return (
        ops.mul(p, p) == p
        and ops.mul(q, q) == q
        and ops.mul(ak, p) == ops.zero
        and ops.mul(q, ak) == ops.zero
        and ops.mul(aw, aw) == aw
        and ops.mul(wa, wa) == wa
    )


_PROPS_CLAIMS = {
    "i": "a y a^k = a^k",
    "ii": "ay and ya are idempotent",
    "iii": "p = 1 - ay is idempotent with p a^k = 0",
    "iv": "y (ay)^k = y",
    "v": "a^{k+1} y a = a^{k+1}",
    "vi": "y a^{k+1} y = a^k a^{mp}",
    "vii": "a^{mp} a y = a^{mp}",
}


def _props_ok(ops, item, a, y, ku, m):
    mul, power = ops.mul, ops.power
    ay = mul(a, y)
    if item == "i":
        return all(mul(ay, power(a, k)) == power(a, k) for k in (1, ku, ku + 1))
    if item == "ii":
        ya = mul(y, a)
        return mul(ay, ay) == ay and mul(ya, ya) == ya
    if item == "iii":
        p = ops.sub(ops.one, ay)
        return mul(p, p) == p and mul(p, power(a, ku)) == ops.zero
    if item == "iv":
        def chained(k):
            t = y
            for _ in range(k):
                t = mul(t, ay)
            return t

        return all(chained(k) == y for k in (1, ku, ku + 1))
    if item == "v":
        return mul(mul(power(a, ku + 1), y), a) == power(a, ku + 1)
    if item == "vi":
        return mul(mul(y, power(a, ku + 1)), y) == mul(power(a, ku), m)
    return mul(mul(m, a), y) == m  # vii


_HERM_CLAIMS = {
    "i": "a^{mp} a y is the group inverse of a",
    "ii": "a^2 y = a",
    "iii": "y^2 = w a^{mp} = y a^{mp}",
    "iv": "w a in wdmp(a^{mp} a)",
    "v": "a w (a a^{mp})^{k+1} = a a^{mp}",
}


def _herm_claims(ops, item, a, ku, m, ys, ws, group_member, wdmp_member):
    """Yield (ok, witnesses) pairs for one hermitian-element sub-claim."""
    if item == "i":
        ma = ops.mul(m, a)
        for y in ys:
            yield group_member(ops.mul(ma, y)), {"a^{wdmp}": y}
    elif item == "ii":
        a2 = ops.power(a, 2)
        for y in ys:
            yield ops.mul(a2, y) == a, {"a^{wdmp}": y}
    elif item == "iii":
        for y in ys:
            y2 = ops.mul(y, y)
            if ops.mul(y, m) != y2:
                yield False, {"a^{wdmp}": y}
                continue
            for w in ws:
                yield ops.mul(w, m) == y2, {"a^{wdmp}": y, "a^{wd}": w}
    elif item == "iv":
        t = ops.mul(m, a)
        for w in ws:
            yield wdmp_member(t, ops.mul(w, a)), {"a^{wd}": w}
    else:  # v
        q = ops.mul(a, m)
        lifted = ops.power(q, ku + 1)
        for w in ws:
            yield ops.mul(ops.mul(a, w), lifted) == q, {"a^{wd}": w}


def _idemp_eq_ok(ops, preds, x, a, b):
    """(1-x)a = b iff xb = 0 and lann(x) in lann(a-b); right-sided mirror."""
    d = ops.sub(a, b)
    left = (ops.mul(ops.sub(ops.one, x), a) == b) == (
        ops.mul(x, b) == ops.zero and preds.lann_incl(x, d)
    )
    right = (ops.mul(a, ops.sub(ops.one, x)) == b) == (
        ops.mul(b, x) == ops.zero and preds.rann_incl(x, d)
    )
    return left and right


def _abs_hyp(ops, a, b, wa, wb):
    return ops.mul(ops.mul(wa, ops.add(a, b)), wb) == ops.add(wa, wb)


def _abs_nec_ok(ops, a, b, wa, wb, ak, bk):
    mul = ops.mul
    return (
        mul(mul(a, wa), mul(b, wb)) == mul(a, wa)
        and mul(mul(wa, a), mul(wb, b)) == mul(wb, b)
        and mul(ak, mul(b, wb)) == ak
        and mul(mul(wa, a), bk) == bk
    )


def _abs_cor_ok(ops, preds, a, b, wa, wb, ak, bk):
    mul = ops.mul
    akb = mul(ak, b)
    abk = mul(a, bk)
    return (
        preds.right_incl(bk, wa)
        and preds.right_eq(ak, akb)
        and preds.lann_incl(wa, bk)
        and preds.lann_eq(ak, akb)
        and preds.left_eq(abk, bk)
        and preds.left_incl(ak, wb)
        and preds.rann_incl(wb, ak)
        and preds.rann_eq(abk, bk)
    )


def _abs_suf_hyp(ops, a, b, wa, wb):
    mul = ops.mul
    return mul(mul(wb, a), wa) == wa and mul(mul(wb, b), wa) == wb


def _abs_suf_ok(ops, a, b, wa, wb, ak, bk):
    mul = ops.mul
    return (
        mul(mul(wb, ops.add(a, b)), wa) == ops.add(wa, wb)
        and mul(bk, mul(a, wa)) == bk
        and mul(mul(wb, b), ak) == ak
        and mul(mul(b, wb), mul(a, wa)) == mul(b, wb)
        and mul(mul(wb, b), mul(wa, a)) == mul(wa, a)
    )


def _mixed_ok(ops, which, a, b, wa, wb, yab, ma, mb, k):
    mul, power = ops.mul, ops.power
    if which == 1:
        return (
            mul(mul(b, yab), a) == mul(mul(b, mb), mul(wa, a))
            and mul(mul(b, yab), power(a, k + 1)) == mul(mul(b, mb), power(a, k))
            and mul(mul(power(b, k + 1), yab), a)
            == mul(mul(power(b, k + 1), mb), mul(wa, a))
        )
    return (
        mul(mul(a, yab), b) == mul(mul(a, ma), mul(wb, b))
        and mul(mul(power(a, k + 1), yab), b)
        == mul(mul(power(a, k + 1), ma), mul(wb, b))
        and mul(mul(a, yab), power(b, k + 1)) == mul(mul(a, ma), power(b, k))
    )


# -- native checkers: finite-ring routes ------------------------------------------


def _rg_pre_ep_eq(ring, rec):
    ops = _RingOps(ring)
    for a in ring.elements():
        m = ring.mp_of(a)
        g = ring.group_of(a)
        if m is None or g is None:
            continue
        rec.check(
            _ep_eq_ok(ops, a, m, g),
            "EP equivalent to power-commutation with the mp inverse (n <= 3)",
            {"a": a},
            {"a^{mp}": m, "a^{grp}": g},
        )


def _rg_pre_hirano_nil(ring, rec):
    for a in ring.elements():
        has = bool(ring.hirano_witness_set(a).witnesses)
        nil = ring.nilpotent(ring.sub(a, ring.power(a, 3)))
        rec.check(
            has == nil,
            "Hirano witness exists iff a - a^3 is nilpotent",
            {"a": a},
        )


def _rg_pre_hirano_drazin(ring, rec):
    for a in ring.elements():
        if not ring.hirano_witness_set(a).witnesses:
            continue
        rec.check(
            ring.drazin_of(a) is not None,
            "Hirano invertible implies Drazin invertible",
            {"a": a},
        )


def _rg_pre_ann(ring, rec):
    preds = _RingIdeals(ring)
    regular = {
        b: bool(ring.witness_set(b, InverseKind.INNER).witnesses)
        for b in ring.elements()
    }
    for a in ring.elements():
        for b in ring.elements():
            binding = {"a": a, "b": b}
            if preds.right_incl(a, b):
                rec.check(
                    preds.lann_incl(b, a),
                    "aR in bR forces lann(b) in lann(a)",
                    binding,
                )
            if regular[b] and preds.lann_incl(b, a):
                rec.check(
                    preds.right_incl(a, b),
                    "regular b with lann(b) in lann(a) forces aR in bR",
                    binding,
                )
            if preds.left_incl(a, b):
                rec.check(
                    preds.rann_incl(b, a),
                    "Ra in Rb forces rann(b) in rann(a)",
                    binding,
                )
            if regular[b] and preds.rann_incl(b, a):
                rec.check(
                    preds.left_incl(a, b),
                    "regular b with rann(b) in rann(a) forces Ra in Rb",
                    binding,
                )


def _rg_wd_drazin(ring, rec):
    for a in ring.elements():
        if not ring.witness_set(a, InverseKind.WD).witnesses:
            continue
        rec.check(
            ring.drazin_of(a) is not None,
            "wd-invertible implies Drazin invertible",
            {"a": a},
        )


def _rg_wd_proj(ring, rec):
    ops = _RingOps(ring)
    for a in ring.elements():
        witnesses = ring.witness_set(a, InverseKind.WD).witnesses
        if not witnesses:
            continue
        ak = ring.power(a, ring.k_used(a))
        for w in witnesses:
            rec.check(
                _proj_ok(ops, a, w, ak),
                "aw, wa, 1-aw, 1-wa idempotent with a^k(1-aw) = (1-wa)a^k = 0",
                {"a": a},
                {"a^{wd}": w},
            )


def _rg_wdmp_props(item):
    def checker(ring, rec):
        ops = _RingOps(ring)
        for a in ring.elements():
            ys = ring.witness_set(a, InverseKind.WDMP).witnesses
            if not ys:
                continue
            ku = ring.k_used(a)
            m = ring.mp_of(a)
            for y in ys:
                rec.check(
                    _props_ok(ops, item, a, y, ku, m),
                    _PROPS_CLAIMS[item],
                    {"a": a},
                    {"a^{wdmp}": y},
                )

    return checker


def _rg_wdmp_dmp(ring, rec):
    for a in ring.elements():
        if not ring.witness_set(a, InverseKind.WDMP).witnesses:
            continue
        rec.check(
            bool(ring.witness_set(a, InverseKind.DMP).witnesses),
            "wdmp-invertible implies dmp-invertible",
            {"a": a},
        )


def _rg_wdmp_rpc(ring, rec):
    for a in ring.elements():
        ys = ring.witness_set(a, InverseKind.WDMP).witnesses
        if not ys:
            continue
        rpc = ring.witness_set(a, InverseKind.RIGHT_PSEUDO_CORE).witnesses
        rec.check(
            bool(rpc) and ys == rpc,
            "wdmp solution set equals the right pseudo core witness set",
            {"a": a},
        )


def _rg_wdmp_herm(item):
    def checker(ring, rec):
        ops = _RingOps(ring)
        for a in ring.elements():
            if ring.star(a) != a:
                continue
            ys = ring.witness_set(a, InverseKind.WDMP).witnesses
            if not ys:
                continue
            ws = ring.witness_set(a, InverseKind.WD).witnesses
            ku = ring.k_used(a)
            m = ring.mp_of(a)
            grp = frozenset(ring.witness_set(a, InverseKind.GROUP).witnesses)

            def group_member(g):
                return g in grp

            def wdmp_member(target, candidate):
                return candidate in ring.witness_set(target, InverseKind.WDMP).witnesses

            for ok, wit in _herm_claims(
                ops, item, a, ku, m, ys, ws, group_member, wdmp_member
            ):
                rec.check(ok, _HERM_CLAIMS[item], {"a": a}, wit)

    return checker


def _rg_ep_wd(ring, rec):
    for a in ring.elements():
        m = ring.mp_of(a)
        if m is None or ring.mul(a, m) != ring.mul(m, a):
            continue
        g = ring.group_of(a)
        ok = (
            g is not None
            and g in ring.witness_set(a, InverseKind.WD).witnesses
            and g in ring.witness_set(a, InverseKind.WDMP).witnesses
        )
        rec.check(
            ok,
            "EP element: the group inverse exists and solves wd and wdmp",
            {"a": a},
            {} if g is None else {"a^{grp}": g},
        )


def _rg_wdmp_ann(ring, rec):
    for a in ring.elements():
        ys = ring.witness_set(a, InverseKind.WDMP).witnesses
        if not ys:
            continue
        astar = ring.star(a)
        for y in ys:
            ystar = ring.star(y)
            ok = (
                ring.principal_left(y) == ring.principal_left(astar)
                and ring.principal_right(a) == ring.principal_right(ystar)
                and frozenset(ring.right_ann(y)) == frozenset(ring.right_ann(astar))
                and frozenset(ring.left_ann(a)) == frozenset(ring.left_ann(ystar))
            )
            rec.check(
                ok,
                "Ry = Ra^*, aR = y^*R, rann(y) = rann(a^*), lann(a) = lann(y^*)",
                {"a": a},
                {"a^{wdmp}": y},
            )


def _rg_wdmp_hirano(ring, rec):
    for a in ring.elements():
        ys = ring.witness_set(a, InverseKind.WDMP).witnesses
        for y in ys:
            ok = bool(ring.hirano_witness_set(ring.mul(a, y)).witnesses) and bool(
                ring.hirano_witness_set(ring.mul(y, a)).witnesses
            )
            rec.check(
                ok,
                "ay and ya are Hirano invertible",
                {"a": a},
                {"a^{wdmp}": y},
            )


def _rg_idemp_eq(ring, rec):
    ops = _RingOps(ring)
    preds = _RingIdeals(ring)
    for x in ring.idempotents():
        for a in ring.elements():
            for b in ring.elements():
                rec.check(
                    _idemp_eq_ok(ops, preds, x, a, b),
                    "(1-x)a = b iff xb = 0 and lann(x) in lann(a-b); mirrored",
                    {"x": x, "a": a, "b": b},
                )


def _rg_cor_wd_idemp(ring, rec):
    ops = _RingOps(ring)
    preds = _RingIdeals(ring)
    for a in ring.elements():
        seen = {}
        for w in ring.witness_set(a, InverseKind.WD).witnesses:
            seen.setdefault(ring.mul(w, a), ("a^{wd}", w))
        for y in ring.witness_set(a, InverseKind.WDMP).witnesses:
            seen.setdefault(ring.mul(y, a), ("a^{wdmp}", y))
        for x, (label, wit) in seen.items():
            for b in ring.elements():
                for c in ring.elements():
                    rec.check(
                        _idemp_eq_ok(ops, preds, x, b, c),
                        "idempotent-equation criterion at x = wa (resp. ya)",
                        {"a": a, "b": b, "c": c},
                        {label: wit},
                    )


def _rg_ann_chain(ring, rec):
    preds = _RingIdeals(ring)
    for a in ring.elements():
        ws = ring.witness_set(a, InverseKind.WD).witnesses
        if not ws:
            continue
        ys = ring.witness_set(a, InverseKind.WDMP).witnesses
        if not ys:
            continue
        lifted = ring.power(a, ring.k_used(a) + 1)
        for w in ws:
            wa = ring.mul(w, a)
            for y in ys:
                ya = ring.mul(y, a)
                rec.check(
                    preds.rann_incl(wa, ya) and preds.rann_incl(ya, lifted),
                    "rann(wa) in rann(ya) in rann(a^{k+1})",
                    {"a": a},
                    {"a^{wd}": w, "a^{wdmp}": y},
                )


def _rg_wd_abs(which):
    def checker(ring, rec):
        ops = _RingOps(ring)
        preds = _RingIdeals(ring) if which == "cor" else None
        wd_sets = {
            a: ring.witness_set(a, InverseKind.WD).witnesses for a in ring.elements()
        }
        for a in ring.elements():
            if not wd_sets[a]:
                continue
            ka = ring.k_used(a)
            for b in ring.elements():
                if not wd_sets[b]:
                    continue
                k = max(ka, ring.k_used(b))
                ak = ring.power(a, k)
                bk = ring.power(b, k)
                for wa in wd_sets[a]:
                    for wb in wd_sets[b]:
                        if which == "suf":
                            if not _abs_suf_hyp(ops, a, b, wa, wb):
                                continue
                            ok = _abs_suf_ok(ops, a, b, wa, wb, ak, bk)
                            claim = "two-sided absorption follows (plus companions)"
                        else:
                            if not _abs_hyp(ops, a, b, wa, wb):
                                continue
                            if which == "nec":
                                ok = _abs_nec_ok(ops, a, b, wa, wb, ak, bk)
                                claim = "absorption forces the four product identities"
                            else:
                                ok = _abs_cor_ok(ops, preds, a, b, wa, wb, ak, bk)
                                claim = "absorption forces the ideal and annihilator relations"
                        rec.check(
                            ok, claim, {"a": a, "b": b}, {"a^{wd}": wa, "b^{wd}": wb}
                        )

    return checker


def _rg_wdmp_mixed(which):
    def checker(ring, rec):
        ops = _RingOps(ring)
        for a in ring.elements():
            wda = ring.witness_set(a, InverseKind.WD).witnesses
            ma = ring.mp_of(a)
            if not wda or ma is None:
                continue
            ka = ring.k_used(a)
            for b in ring.elements():
                wdb = ring.witness_set(b, InverseKind.WD).witnesses
                mb = ring.mp_of(b)
                if not wdb or mb is None:
                    continue
                k = max(ka, ring.k_used(b))
                ab = ring.mul(a, b)
                yabs = ring.witness_set(ab, InverseKind.WDMP).witnesses
                if not yabs:
                    continue
                for wa in wda:
                    ya = ring.mul(ring.mul(wa, a), ma)
                    for wb in wdb:
                        yb = ring.mul(ring.mul(wb, b), mb)
                        prod = ring.mul(yb, ya) if which == 1 else ring.mul(ya, yb)
                        if prod not in yabs:
                            continue
                        rec.check(
                            _mixed_ok(ops, which, a, b, wa, wb, prod, ma, mb, k),
                            "split wdmp product transfers through b ... a",
                            {"a": a, "b": b},
                            {"a^{wd}": wa, "b^{wd}": wb, "(ab)^{wdmp}": prod},
                        )

    return checker


# -- native checkers: sampled matrix routes ---------------------------------------


def _mx_pre_ep_eq(sampler, rec, samples):
    rng = random.Random(sampler.seed)
    n, f = sampler.dimension, sampler.field
    ops = _MatrixOps(n, f)
    for i in range(samples):
        variant = i % 3
        if variant == 0:
            a = ep_matrix(rng, n, f, rng.randrange(n + 1))
        elif variant == 1:
            a = idempotent_matrix(rng, n, f, rng.randrange(n + 1))
        else:
            a = unimodular_matrix(rng, n, f)
        if drazin_index(a).index > 1:
            continue
        m = mp_inverse(a).value
        g = group_inverse(a).value
        rec.check(
            _ep_eq_ok(ops, a, m, g),
            "EP equivalent to power-commutation with the mp inverse (n <= 3)",
            {"a": a},
            {"a^{mp}": m, "a^{grp}": g},
        )


def _mx_pre_hirano_nil(sampler, rec, samples):
    for a in variety_pool(sampler.dimension, sampler.field, sampler.seed, samples):
        if not nilpotent_check(a - a.power(3)):
            continue
        b = a * drazin_inverse(a.power(2)).value
        ok = (
            b == b * a * b
            and a * b == b * a
            and nilpotent_check(a.power(2) - a * b)
        )
        rec.check(
            ok,
            "nilpotent a - a^3 yields the Hirano witness a (a^2)^d",
            {"a": a},
            {"b": b},
        )


def _mx_pre_hirano_drazin(sampler, rec, samples):
    for a in variety_pool(sampler.dimension, sampler.field, sampler.seed, samples):
        if not hirano_invertible(a):
            continue
        d = drazin_inverse(a).value
        rec.check(
            verify_definition(InverseKind.DRAZIN, a, d, k_used(a)),
            "Hirano invertible implies Drazin invertible",
            {"a": a},
            {"a^{d}": d},
        )


def _mx_pre_ann(sampler, rec, samples):
    for bind in sampler.bindings(("a", "b"), samples):
        a, b = bind["a"], bind["b"]
        binding = {"a": a, "b": b}
        rank_cols = range_included(a, b)
        kernel_cols = all(_vm_zero(v, a) for v in left_nullspace_basis(b))
        rec.check(
            rank_cols == kernel_cols,
            "aR in bR iff lann(b) in lann(a) (rank route vs kernel route)",
            binding,
        )
        rank_rows = row_space_included(a, b)
        kernel_rows = all(_mv_zero(a, v) for v in nullspace_basis(b))
        rec.check(
            rank_rows == kernel_rows,
            "Ra in Rb iff rann(b) in rann(a) (rank route vs kernel route)",
            binding,
        )


def _mx_wd_drazin(sampler, rec, samples):
    for bind in sampler.bindings(("a",), samples):
        a = bind["a"]
        w = wd_canonical(a).value
        d = drazin_inverse(a).value
        k = k_used(a)
        ok = verify_definition(InverseKind.WD, a, w, k) and verify_definition(
            InverseKind.DRAZIN, a, d, k
        )
        rec.check(
            ok,
            "wd-invertible implies Drazin invertible",
            {"a": a},
            {"a^{wd}": w, "a^{d}": d},
        )


def _mx_wd_proj(sampler, rec, samples):
    ops = _MatrixOps(sampler.dimension, sampler.field)
    for bind in sampler.bindings(("a",), samples):
        a = bind["a"]
        ak = a.power(k_used(a))
        for w in _wd_samples(a, sampler.seed):
            rec.check(
                _proj_ok(ops, a, w, ak),
                "aw, wa, 1-aw, 1-wa idempotent with a^k(1-aw) = (1-wa)a^k = 0",
                {"a": a},
                {"a^{wd}": w},
            )


def _mx_wdmp_props(item):
    def checker(sampler, rec, samples):
        ops = _MatrixOps(sampler.dimension, sampler.field)
        for bind in sampler.bindings(("a",), samples):
            a = bind["a"]
            m = mp_inverse(a).value
            ku = k_used(a)
            for y in _tied_wdmp(a, _wd_samples(a, sampler.seed), m):
                rec.check(
                    _props_ok(ops, item, a, y, ku, m),
                    _PROPS_CLAIMS[item],
                    {"a": a},
                    {"a^{wdmp}": y},
                )

    return checker


def _mx_wdmp_dmp(sampler, rec, samples):
    for bind in sampler.bindings(("a",), samples):
        a = bind["a"]
        x = dmp_inverse(a).value
        rec.check(
            verify_definition(InverseKind.DMP, a, x, k_used(a)),
            "wdmp-invertible implies dmp-invertible",
            {"a": a},
            {"a^{dmp}": x},
        )


def _mx_wdmp_rpc(sampler, rec, samples):
    for bind in sampler.bindings(("a",), samples):
        a = bind["a"]
        m = mp_inverse(a).value
        rpc = right_pseudo_core_inverse(a).value
        for y in _tied_wdmp(a, _wd_samples(a, sampler.seed), m):
            rec.check(
                y == rpc,
                "wdmp solution set equals the right pseudo core witness set",
                {"a": a},
                {"a^{wdmp}": y, "a^{rpc}": rpc},
            )


def _mx_wdmp_herm(item):
    def checker(sampler, rec, samples):
        ops = _MatrixOps(sampler.dimension, sampler.field)
        for bind in sampler.bindings(("a",), samples):
            a = bind["a"]
            if not a.is_hermitian():
                continue
            m = mp_inverse(a).value
            ws = _wd_samples(a, sampler.seed)
            ys = _tied_wdmp(a, ws, m)
            ku = k_used(a)
            try:
                gval = group_inverse(a).value
            except IndexTooLarge:
                gval = None

            def group_member(g):
                return gval is not None and g == gval

            for ok, wit in _herm_claims(
                ops, item, a, ku, m, ys, ws, group_member, _wdmp_member
            ):
                rec.check(ok, _HERM_CLAIMS[item], {"a": a}, wit)

    return checker


def _mx_ep_wd(sampler, rec, samples):
    for bind in sampler.bindings(("a",), samples):
        a = bind["a"]
        if not is_ep(a):
            continue
        try:
            g = group_inverse(a).value
        except IndexTooLarge:
            rec.check(False, "EP element has a group inverse", {"a": a})
            continue
        ok = verify_definition(InverseKind.WD, a, g, k_used(a)) and _wdmp_member(a, g)
        rec.check(
            ok,
            "EP element: the group inverse exists and solves wd and wdmp",
            {"a": a},
            {"a^{grp}": g},
        )


def _mx_wdmp_ann(sampler, rec, samples):
    for bind in sampler.bindings(("a",), samples):
        a = bind["a"]
        m = mp_inverse(a).value
        astar = a.conj_transpose()
        for y in _tied_wdmp(a, _wd_samples(a, sampler.seed), m):
            ystar = y.conj_transpose()
            rank_ok = (
                row_space_equal(y, astar)
                and range_included(a, ystar)
                and range_included(ystar, a)
            )
            kernel_ok = (
                all(_mv_zero(astar, v) for v in nullspace_basis(y))
                and all(_mv_zero(y, v) for v in nullspace_basis(astar))
                and all(_vm_zero(v, ystar) for v in left_nullspace_basis(a))
                and all(_vm_zero(v, a) for v in left_nullspace_basis(ystar))
            )
            rec.check(
                rank_ok and kernel_ok,
                "Ry = Ra^*, aR = y^*R, rann(y) = rann(a^*), lann(a) = lann(y^*)",
                {"a": a},
                {"a^{wdmp}": y},
            )


def _mx_wdmp_hirano(sampler, rec, samples):
    for bind in sampler.bindings(("a",), samples):
        a = bind["a"]
        m = mp_inverse(a).value
        for y in _tied_wdmp(a, _wd_samples(a, sampler.seed), m):
            rec.check(
                hirano_invertible(a * y) and hirano_invertible(y * a),
                "ay and ya are Hirano invertible",
                {"a": a},
                {"a^{wdmp}": y},
            )


def _mx_idemp_eq(sampler, rec, samples):
    rng = random.Random(sampler.seed)
    n, f = sampler.dimension, sampler.field
    ops = _MatrixOps(n, f)
    preds = _MatrixIdeals()
    for _ in range(samples):
        x = idempotent_matrix(rng, n, f, rng.randrange(n + 1))
        a = random_matrix(rng, n, f)
        complement = ops.sub(ops.one, x)
        for b in (complement * a, a * complement, random_matrix(rng, n, f)):
            rec.check(
                _idemp_eq_ok(ops, preds, x, a, b),
                "(1-x)a = b iff xb = 0 and lann(x) in lann(a-b); mirrored",
                {"x": x, "a": a, "b": b},
            )


def _mx_cor_wd_idemp(sampler, rec, samples):
    rng = random.Random(sampler.seed)
    n, f = sampler.dimension, sampler.field
    ops = _MatrixOps(n, f)
    preds = _MatrixIdeals()
    for bind in sampler.bindings(("a", "b"), samples):
        a, b = bind["a"], bind["b"]
        m = mp_inverse(a).value
        ws = _wd_samples(a, sampler.seed)
        seen = {}
        for w in ws:
            seen.setdefault(w * a, ("a^{wd}", w))
        for y in _tied_wdmp(a, ws, m):
            seen.setdefault(y * a, ("a^{wdmp}", y))
        for x, (label, wit) in seen.items():
            complement = ops.sub(ops.one, x)
            for c in (complement * b, b * complement, random_matrix(rng, n, f)):
                rec.check(
                    _idemp_eq_ok(ops, preds, x, b, c),
                    "idempotent-equation criterion at x = wa (resp. ya)",
                    {"a": a, "b": b, "c": c},
                    {label: wit},
                )


def _mx_ann_chain(sampler, rec, samples):
    preds = _MatrixIdeals()
    for bind in sampler.bindings(("a",), samples):
        a = bind["a"]
        m = mp_inverse(a).value
        ws = _wd_samples(a, sampler.seed)
        lifted = a.power(k_used(a) + 1)
        for w in ws:
            wa = w * a
            for y in _tied_wdmp(a, ws, m):
                ya = y * a
                rec.check(
                    preds.rann_incl(wa, ya) and preds.rann_incl(ya, lifted),
                    "rann(wa) in rann(ya) in rann(a^{k+1})",
                    {"a": a},
                    {"a^{wd}": w, "a^{wdmp}": y},
                )


def _mx_wd_abs(which):
    def checker(sampler, rec, samples):
        ops = _MatrixOps(sampler.dimension, sampler.field)
        preds = _MatrixIdeals() if which == "cor" else None
        for bind in sampler.bindings(("a", "b"), samples):
            a, b = bind["a"], bind["b"]
            k = max(k_used(a), k_used(b))
            ak = a.power(k)
            bk = b.power(k)
            for wa in _wd_samples(a, sampler.seed):
                for wb in _wd_samples(b, sampler.seed):
                    if which == "suf":
                        if not _abs_suf_hyp(ops, a, b, wa, wb):
                            continue
                        ok = _abs_suf_ok(ops, a, b, wa, wb, ak, bk)
                        claim = "two-sided absorption follows (plus companions)"
                    else:
                        if not _abs_hyp(ops, a, b, wa, wb):
                            continue
                        if which == "nec":
                            ok = _abs_nec_ok(ops, a, b, wa, wb, ak, bk)
                            claim = "absorption forces the four product identities"
                        else:
                            ok = _abs_cor_ok(ops, preds, a, b, wa, wb, ak, bk)
                            claim = "absorption forces the ideal and annihilator relations"
                    rec.check(
                        ok, claim, {"a": a, "b": b}, {"a^{wd}": wa, "b^{wd}": wb}
                    )

    return checker


def _mx_wdmp_mixed(which):
    def checker(sampler, rec, samples):
        ops = _MatrixOps(sampler.dimension, sampler.field)
        for bind in sampler.bindings(("a", "b"), samples):
            a, b = bind["a"], bind["b"]
            ma = mp_inverse(a).value
            mb = mp_inverse(b).value
            k = max(k_used(a), k_used(b))
            ab = a * b
            kab = k_used(ab)
            dab = drazin_inverse(ab).value
            mab = mp_inverse(ab).value
            abk = ab.power(kab)
            ab_mab = ab * mab
            dab_abk = dab * abk
            for wa in _wd_samples(a, sampler.seed):
                ya = wa * a * ma
                for wb in _wd_samples(b, sampler.seed):
                    yb = wb * b * mb
                    prod = yb * ya if which == 1 else ya * yb
                    member = (
                        prod * ab * prod == prod
                        and ab * prod == ab_mab
                        and prod * abk == dab_abk
                    )
                    if not member:
                        continue
                    rec.check(
                        _mixed_ok(ops, which, a, b, wa, wb, prod, ma, mb, k),
                        "split wdmp product transfers through b ... a",
                        {"a": a, "b": b},
                        {"a^{wd}": wa, "b^{wd}": wb, "(ab)^{wdmp}": prod},
                    )

    return checker


_NATIVE = {
    "pre_ep_eq": (_rg_pre_ep_eq, _mx_pre_ep_eq),
    "pre_hirano_nil": (_rg_pre_hirano_nil, _mx_pre_hirano_nil),
    "pre_hirano_drazin": (_rg_pre_hirano_drazin, _mx_pre_hirano_drazin),
    "pre_ann": (_rg_pre_ann, _mx_pre_ann),
    "wd_drazin": (_rg_wd_drazin, _mx_wd_drazin),
    "wd_proj": (_rg_wd_proj, _mx_wd_proj),
    "wdmp_props_i": (_rg_wdmp_props("i"), _mx_wdmp_props("i")),
    "wdmp_props_ii": (_rg_wdmp_props("ii"), _mx_wdmp_props("ii")),
    "wdmp_props_iii": (_rg_wdmp_props("iii"), _mx_wdmp_props("iii")),
    "wdmp_props_iv": (_rg_wdmp_props("iv"), _mx_wdmp_props("iv")),
    "wdmp_props_v": (_rg_wdmp_props("v"), _mx_wdmp_props("v")),
    "wdmp_props_vi": (_rg_wdmp_props("vi"), _mx_wdmp_props("vi")),
    "wdmp_props_vii": (_rg_wdmp_props("vii"), _mx_wdmp_props("vii")),
    "wdmp_dmp": (_rg_wdmp_dmp, _mx_wdmp_dmp),
    "wdmp_rpc": (_rg_wdmp_rpc, _mx_wdmp_rpc),
    "wdmp_herm_i": (_rg_wdmp_herm("i"), _mx_wdmp_herm("i")),
    "wdmp_herm_ii": (_rg_wdmp_herm("ii"), _mx_wdmp_herm("ii")),
    "wdmp_herm_iii": (_rg_wdmp_herm("iii"), _mx_wdmp_herm("iii")),
    "wdmp_herm_iv": (_rg_wdmp_herm("iv"), _mx_wdmp_herm("iv")),
    "wdmp_herm_v": (_rg_wdmp_herm("v"), _mx_wdmp_herm("v")),
    "ep_wd": (_rg_ep_wd, _mx_ep_wd),
    "wdmp_ann": (_rg_wdmp_ann, _mx_wdmp_ann),
    "wdmp_hirano": (_rg_wdmp_hirano, _mx_wdmp_hirano),
    "idemp_eq": (_rg_idemp_eq, _mx_idemp_eq),
    "cor_wd_idemp": (_rg_cor_wd_idemp, _mx_cor_wd_idemp),
    "ann_chain": (_rg_ann_chain, _mx_ann_chain),
    "wd_abs_nec": (_rg_wd_abs("nec"), _mx_wd_abs("nec")),
    "wd_abs_cor": (_rg_wd_abs("cor"), _mx_wd_abs("cor")),
    "wd_abs_suf": (_rg_wd_abs("suf"), _mx_wd_abs("suf")),
    "wdmp_mixed_1": (_rg_wdmp_mixed(1), _mx_wdmp_mixed(1)),
    "wdmp_mixed_2": (_rg_wdmp_mixed(2), _mx_wdmp_mixed(2)),
}


# -- the catalog -----------------------------------------------------------------

_BOTH = ("ring", "matrix")


def _entry(id_, title, claim, checker, expected="holds", strategy="mixed", elided=False):
    return TheoremEntry(
        id=id_,
        title=title,
        claim=claim,
        carriers=_BOTH,
        checker=checker,
        expected=expected,
        strategy=strategy,
        proof_elided=elided,
    )


CATALOG = (
    _entry(
        "PRE-MP-ADD",
        "Additivity of the Moore-Penrose inverse under star-orthogonality",
        "a^* b = 0 and a b^* = 0 imply a^{mp} + b^{mp} in mp(a+b)",
        "law:pre_mp_add.law",
        strategy="orthogonal",
    ),
    _entry(
        "PRE-EP-EQ",
        "EP characterized by power-commutation with the mp inverse",
        "for a with group and mp inverses: EP iff a^n a^{mp} = a^{mp} a^n "
        "for some n <= 3 iff the same with a^{grp} iff (a^{mp})^n = (a^{grp})^n",
        "native:pre_ep_eq",
        strategy="ep",
    ),
    _entry(
        "PRE-HIRANO-NIL",
        "Hirano invertibility via nilpotency of a - a^3",
        "a has a Hirano witness iff a - a^3 is nilpotent",
        "native:pre_hirano_nil",
        expected="produces-witnesses",
    ),
    _entry(
        "PRE-HIRANO-DRAZIN",
        "Hirano invertible elements are Drazin invertible",
        "a Hirano invertible implies a Drazin invertible",
        "native:pre_hirano_drazin",
    ),
    _entry(
        "PRE-ANN",
        "Principal ideal inclusions against annihilator inclusions",
        "aR in bR forces lann(b) in lann(a); for regular b the converse; "
        "mirrored for left ideals and right annihilators",
        "native:pre_ann",
    ),
    _entry(
        "WD-DRAZIN",
        "wd-invertible elements are Drazin invertible",
        "wd(a) nonempty implies a Drazin invertible",
        "native:wd_drazin",
    ),
    _entry(
        "WD-IDEMP",
        "Idempotents are their own wd inverses",
        "a*a = a implies a in wd(a)",
        "law:wd_idemp.law",
        expected="produces-witnesses",
        strategy="commuting_projectors",
    ),
    _entry(
        "WD-PROJ",
        "Idempotents and annihilation from a wd witness",
        "for w in wd(a): aw, wa, 1-aw, 1-wa idempotent, a^k (1-aw) = 0, "
        "(1-wa) a^k = 0",
        "native:wd_proj",
    ),
    _entry(
        "WDMP-SOLVE",
        "The canonical wdmp solution",
        "a^{wd} a a^{mp} in wdmp(a)",
        "law:wdmp_solve.law",
        expected="produces-witnesses",
    ),
    _entry(
        "WDMP-PROPS-i",
        "wdmp solutions reproduce powers",
        "a y a^k = a^k for every wdmp solution y",
        "native:wdmp_props_i",
    ),
    _entry(
        "WDMP-PROPS-ii",
        "wdmp solutions give idempotent products",
        "ay and ya are idempotent",
        "native:wdmp_props_ii",
    ),
    _entry(
        "WDMP-PROPS-iii",
        "The complement projector kills powers",
        "p = 1 - ay is idempotent with p a^k = 0",
        "native:wdmp_props_iii",
    ),
    _entry(
        "WDMP-PROPS-iv",
        "wdmp solutions absorb (ay)-powers",
        "y (ay)^k = y",
        "native:wdmp_props_iv",
    ),
    _entry(
        "WDMP-PROPS-v",
        "High powers pass through wdmp solutions",
        "a^{k+1} y a = a^{k+1}",
        "native:wdmp_props_v",
    ),
    _entry(
        "WDMP-PROPS-vi",
        "Sandwiched powers collapse to a^k a^mp",
        "y a^{k+1} y = a^k a^{mp}",
        "native:wdmp_props_vi",
    ),
    _entry(
        "WDMP-PROPS-vii",
        "mp-projection fixes wdmp solutions",
        "a^{mp} a y = a^{mp}",
        "native:wdmp_props_vii",
    ),
    _entry(
        "WDMP-DMP",
        "wdmp-invertible elements are dmp-invertible",
        "wdmp(a) nonempty implies dmp(a) nonempty",
        "native:wdmp_dmp",
    ),
    _entry(
        "WDMP-RPC",
        "wdmp solutions against right pseudo core witnesses",
        "wdmp(a) nonempty implies the right pseudo core witness set is "
        "nonempty and equals wdmp(a)",
        "native:wdmp_rpc",
        elided=True,
    ),
    _entry(
        "WDMP-HERM-i",
        "Hermitian case: group inverse from a wdmp solution",
        "a^{mp} a y is the group inverse of a",
        "native:wdmp_herm_i",
        strategy="hermitian",
    ),
    _entry(
        "WDMP-HERM-ii",
        "Hermitian case: quadratic recovery",
        "a^2 y = a",
        "native:wdmp_herm_ii",
        strategy="hermitian",
    ),
    _entry(
        "WDMP-HERM-iii",
        "Hermitian case: squared solutions",
        "y^2 = w a^{mp} = y a^{mp} for every wd witness w",
        "native:wdmp_herm_iii",
        strategy="hermitian",
    ),
    _entry(
        "WDMP-HERM-iv",
        "Hermitian case: transferred wdmp solution",
        "w a in wdmp(a^{mp} a)",
        "native:wdmp_herm_iv",
        strategy="hermitian",
    ),
    _entry(
        "WDMP-HERM-v",
        "Hermitian case: projector absorption",
        "a w (a a^{mp})^{k+1} = a a^{mp}",
        "native:wdmp_herm_v",
        strategy="hermitian",
    ),
    _entry(
        "EP-WD",
        "EP elements: the group inverse solves wd and wdmp",
        "a EP with mp inverse implies a^{grp} exists, a^{grp} in wd(a), "
        "a^{grp} in wdmp(a)",
        "native:ep_wd",
        strategy="ep",
        elided=True,
    ),
    _entry(
        "WDMP-ANN",
        "Ideals and annihilators of a wdmp solution",
        "Ry = Ra^*, aR = y^*R, rann(y) = rann(a^*), lann(a) = lann(y^*)",
        "native:wdmp_ann",
    ),
    _entry(
        "WDMP-HIRANO",
        "Hirano invertibility of ay and ya",
        "ay and ya are Hirano invertible for every wdmp solution y",
        "native:wdmp_hirano",
    ),
    _entry(
        "IDEMP-EQ",
        "Solvability criterion for (1-x)a = b at an idempotent",
        "(1-x)a = b iff xb = 0 and lann(x) in lann(a-b); mirrored on the right",
        "native:idemp_eq",
    ),
    _entry(
        "COR-WD-IDEMP",
        "The idempotent criterion at x = wa and x = ya",
        "the (1-x)b = c criterion with x = wa for w in wd(a), and x = ya "
        "for y in wdmp(a)",
        "native:cor_wd_idemp",
    ),
    _entry(
        "ANN-CHAIN",
        "Right annihilator chain through wd and wdmp products",
        "rann(wa) in rann(ya) in rann(a^{k+1})",
        "native:ann_chain",
    ),
    _entry(
        "WD-ADD",
        "Additivity of wd inverses under two-sided orthogonality",
        "a^{wd} + b^{wd} in wd(a+b) when ab = ba = 0 and the witnesses "
        "annihilate crosswise",
        "law:wd_add.law",
        strategy="orthogonal",
    ),
    _entry(
        "WD-ROL-A",
        "Reverse-order law for wd inverses (projector-commutation form)",
        "b^{wd} a^{wd} in wd(ab) when ab = ba and b b^{wd} a^{wd} = "
        "a^{wd} b b^{wd}",
        "law:wd_rol_a.law",
        strategy="commuting",
    ),
    _entry(
        "WD-ROL-B",
        "Reverse-order law for wd inverses (witness-commutation form)",
        "b^{wd} a^{wd} in wd(ab) when ab = ba and b a^{wd} a = a^{wd} a b",
        "law:wd_rol_b.law",
        strategy="commuting",
    ),
    _entry(
        "WD-FOL",
        "Forward-order law for wd inverses",
        "a^{wd} b^{wd} in wd(ab) when ab = ba and b^{wd} b a = a b^{wd} b",
        "law:wd_fol.law",
        strategy="commuting",
    ),
    _entry(
        "WD-ROL3",
        "Triple-product reverse-order law",
        "c^{wd} b^{wd} a^{wd} in wd(abc) for pairwise commuting a, b, c "
        "under two projector-commutation hypotheses",
        "law:wd_rol3.law",
        strategy="commuting",
    ),
    _entry(
        "WD-FOL3",
        "Triple-product forward-order law",
        "a^{wd} b^{wd} c^{wd} in wd(abc) for pairwise commuting a, b, c "
        "under two projector-commutation hypotheses",
        "law:wd_fol3.law",
        strategy="commuting",
    ),
    _entry(
        "WD-ABS-NEC",
        "Necessary identities under the absorption law",
        "wa (a+b) wb = wa + wb forces a wa b wb = a wa, wa a wb b = wb b, "
        "a^k b wb = a^k, wa a b^k = b^k",
        "native:wd_abs_nec",
        strategy="equal",
    ),
    _entry(
        "WD-ABS-COR",
        "Ideal and annihilator consequences of the absorption law",
        "under the absorption hypothesis: b^k R in wa R, a^k R = a^k b R, "
        "R a b^k = R b^k, R a^k in R wb, plus the annihilator mirrors",
        "native:wd_abs_cor",
        strategy="equal",
    ),
    _entry(
        "WD-ABS-SUF",
        "Sufficient conditions for the absorption law",
        "wb a wa = wa and wb b wa = wb force wb (a+b) wa = wa + wb "
        "(plus four companions)",
        "native:wd_abs_suf",
        strategy="equal",
    ),
    _entry(
        "WDMP-ADD",
        "Additivity of wdmp inverses under two-sided orthogonality",
        "a^{wdmp} + b^{wdmp} in wdmp(a+b) under star and witness "
        "orthogonality",
        "law:wdmp_add.law",
        strategy="orthogonal",
    ),
    _entry(
        "WDMP-ADD-HERM",
        "Hermitian corollary of wdmp additivity",
        "for hermitian orthogonal a, b: a^{wdmp} + b^{wdmp} in wdmp(a+b)",
        "law:wdmp_add_herm.law",
        strategy="orthogonal_hermitian",
    ),
    _entry(
        "WDMP-ROL",
        "Reverse-order law for wdmp inverses",
        "b^{wdmp} a^{wdmp} in wdmp(ab) under commutation, star-commutation, "
        "and two projector-commutation hypotheses",
        "law:wdmp_rol.law",
        strategy="commuting",
    ),
    _entry(
        "WDMP-FOL-HERM",
        "Forward-order law for commuting hermitian projections",
        "a^{wdmp} b^{wdmp} in wdmp(ab) for commuting hermitian idempotents",
        "law:wdmp_fol_herm.law",
        strategy="commuting_projectors",
    ),
    _entry(
        "WDMP-MIXED-1",
        "Split transfer through a reverse wdmp product",
        "y_b y_a in wdmp(ab) forces b (ab)^{wdmp} a = b b^{mp} w_a a "
        "plus the powered variants",
        "native:wdmp_mixed_1",
        strategy="commuting",
    ),
    _entry(
        "WDMP-MIXED-2",
        "Split transfer through a forward wdmp product",
        "y_a y_b in wdmp(ab) forces a (ab)^{wdmp} b = a a^{mp} w_b b "
        "plus the powered variants",
        "native:wdmp_mixed_2",
        strategy="commuting",
    ),
)

_BY_ID = {entry.id: entry for entry in CATALOG}

_LAW_CACHE = {}


def _law_text(filename):
    if filename not in _LAW_CACHE:
        _LAW_CACHE[filename] = (
            resources.files("ginvlab") / "laws" / filename
        ).read_text(encoding="utf-8")
    return _LAW_CACHE[filename]


# -- carriers and runners ----------------------------------------------------------


@dataclass(frozen=True)
class _Carrier:
    kind: str  # "ring" | "matrix"
    name: str
    ring: object = None
    dimension: int = 0
    field: str = ""
    sampler: object = None


def _resolve_carrier(carrier, seed):
    if isinstance(carrier, FiniteRing):
        return _Carrier(kind="ring", name=carrier.name, ring=carrier)
    if isinstance(carrier, MatrixSampler):
        return _Carrier(
            kind="matrix",
            name=f"{carrier.dimension}:{carrier.field}",
            dimension=carrier.dimension,
            field=carrier.field,
            sampler=carrier,
        )
    if isinstance(carrier, str):
        try:
            ring = ring_build(carrier)
        except RingFormatError:
            try:
                n, field = parse_matrix_spec(carrier)
            except MatrixSpecError:
                raise ValueError(
                    f"unrecognized carrier spec {carrier!r}: expected a ring "
                    "spec like 'Zn:6' or a matrix spec like '3:Q'"
                ) from None
            return _Carrier(
                kind="matrix", name=f"{n}:{field}", dimension=n, field=field
            )
        return _Carrier(kind="ring", name=carrier, ring=ring)
    raise ValueError(
        f"carrier must be a FiniteRing, MatrixSampler, or spec string, "
        f"got {type(carrier).__name__}"
    )


def _run_entry(entry, carrier, budget, samples, seed):
    scheme, target = entry.checker.split(":", 1)
    warnings = []
    if scheme == "law":
        law = parse_law(_law_text(target))
        if carrier.kind == "ring":
            report = evaluate_law(
                law, carrier.ring, mode="exhaustive", budget=budget, seed=seed
            )
        else:
            sampler = carrier.sampler or MatrixSampler(
                carrier.dimension, carrier.field, seed=seed, strategy=entry.strategy
            )
            report = evaluate_law(
                law, sampler, mode="sampled", budget=budget, samples=samples, seed=seed
            )
        status = report.status
        checked = report.bindings_satisfying
        records = list(report.counterexamples)
        warnings.extend(report.warnings)
    elif scheme == "native":
        if target not in _NATIVE:
            raise UnknownTheorem(f"native checker {target!r} is not registered")
        ring_fn, matrix_fn = _NATIVE[target]
        rec = _Recorder(budget)
        if carrier.kind == "ring":
            ring_fn(carrier.ring, rec)
        else:
            sampler = carrier.sampler or MatrixSampler(
                carrier.dimension, carrier.field, seed=seed, strategy=entry.strategy
            )
            matrix_fn(sampler, rec, samples)
        status = "fail" if rec.failures else ("vacuous" if rec.checked == 0 else "pass")
        checked = rec.checked
        records = rec.records
    else:
        raise UnknownTheorem(f"unrecognized checker scheme {entry.checker!r}")
    if (
        entry.proof_elided
        and status == "fail"
        and carrier.kind == "ring"
        and not carrier.ring.proper
    ):
        records = [{**record, "properness_gap": True} for record in records]
        warnings.append(
            "carrier star-ring is not proper; these failures may reflect the "
            "missing properness hypothesis rather than the claim itself"
        )
    return {
        "id": entry.id,
        "carrier": carrier.name,
        "status": status,
        "bindings_checked": checked,
        "counterexamples": records,
        "warnings": warnings,
    }


def run_theorem(theorem_id, carrier, budget=10, samples=200, seed=0):
    """Run one catalog entry on one carrier and return its dashboard row.

    carrier may be a FiniteRing, a MatrixSampler, or a spec string ("Zn:6",
    "M2:Z2", "3:Q", "2:Q(i)"). Raises UnknownTheorem for an unknown id and
    InapplicableCarrier when the entry does not support the carrier family.
    """
    if theorem_id not in _BY_ID:
        raise UnknownTheorem(f"unknown theorem id {theorem_id!r}")
    entry = _BY_ID[theorem_id]
    resolved = _resolve_carrier(carrier, seed)
    if resolved.kind not in entry.carriers:
        raise InapplicableCarrier(
            f"{theorem_id} does not run on {resolved.kind} carriers"
        )
    return _run_entry(entry, resolved, budget, samples, seed)


def run_all(carriers=None, budget=10, samples=200, seed=0, ids=None, entries=None):
    """Run every applicable catalog entry on every carrier; aggregate a dashboard.

    The dashboard is a JSON-ready dict: version, seed, budget, samples, the
    carrier names, one row per (entry, carrier) pair in catalog-then-carrier
    order, and the count of rows whose status is "fail" or "error". A checker
    that raises is flagged as an "error" row rather than aborting the run.
    Entries run in parallel when GINV_THREADS is set above 1; the merge order
    is deterministic either way.
    """
    pool_entries = CATALOG if entries is None else tuple(entries)
    if ids is not None:
        index = {entry.id: entry for entry in pool_entries}
        missing = [i for i in ids if i not in index]
        if missing:
            raise UnknownTheorem(f"unknown theorem ids {missing!r}")
        pool_entries = tuple(index[i] for i in ids)
    if carriers is None:
        carriers = DEFAULT_ROSTER
    resolved = [_resolve_carrier(c, seed) for c in carriers]
    tasks = [
        (entry, carrier)
        for entry in pool_entries
        for carrier in resolved
        if carrier.kind in entry.carriers
    ]

    def run_one(task):
        entry, carrier = task
        try:
            return _run_entry(entry, carrier, budget, samples, seed)
        except Exception as exc:  # noqa: BLE001 - dashboard must flag, not abort
            return {
                "id": entry.id,
                "carrier": carrier.name,
                "status": "error",
                "bindings_checked": 0,
                "counterexamples": [],
                "warnings": [f"checker error: {exc}"],
            }

    threads = _thread_count()
    if threads > 1 and len(tasks) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            rows = list(pool.map(run_one, tasks))
    else:
        rows = [run_one(task) for task in tasks]
    failures = sum(1 for row in rows if row["status"] in ("fail", "error"))
    return {
        "version": __version__,
        "seed": seed,
        "budget": budget,
        "samples": samples,
        "carriers": [carrier.name for carrier in resolved],
        "entries": rows,
        "failures": failures,
    }


if __name__ == "__main__":
    import doctest

    doctest.testmod()
