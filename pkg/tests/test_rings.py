"""Finite *-ring oracle: construction, axioms, and exhaustive witness sets."""

import pytest

from ginvlab.engine import InverseKind
from ginvlab.rings import (
    RingAxiomError,
    RingFormatError,
    TooLarge,
    proper_check,
    ring_build,
    ring_from_tables,
    witness_set,
)

# Codes for M2 over Z2: a matrix [[p,q],[r,s]] is p + 2q + 4r + 8s.
E11, E12, E21, E22, IDENT = 1, 2, 4, 8, 9


@pytest.fixture(scope="module")
def z6():
    return ring_build("Zn:6")


@pytest.fixture(scope="module")
def m2z2():
    return ring_build("M2:Z2")


# -- construction ------------------------------------------------------------------


def test_ring_build_sizes(z6, m2z2):
    assert z6.size == 6 and z6.name == "Zn:6"
    assert m2z2.size == 16
    assert ring_build("M2:Z3").size == 81


@pytest.mark.parametrize("bad", ["", "Zn:", "Zn:0", "Zn:-3", "Q", "M2", "M2:Z", "zn:6"])
def test_ring_build_rejects_malformed_specs(bad):
    with pytest.raises(RingFormatError):
        ring_build(bad)


def test_ring_build_respects_cap():
    with pytest.raises(TooLarge):
        ring_build("M3:Z5")  # 5^9 elements


def test_ring_from_tables_round_trip(z6):
    clone = ring_from_tables(
        {
            "name": "Zn:6-clone",
            "add": [list(row) for row in z6.add_table],
            "mul": [list(row) for row in z6.mul_table],
            "star": list(z6.star_table),
        }
    )
    assert clone.size == 6
    assert clone.witness_set(2, InverseKind.WD).witnesses == (2, 5)


def test_ring_from_tables_validates_axioms(z6):
    mul = [list(row) for row in z6.mul_table]
    mul[2][3] = 1  # breaks associativity/distributivity
    with pytest.raises(RingAxiomError):
        ring_from_tables(
            {
                "add": [list(row) for row in z6.add_table],
                "mul": mul,
                "star": list(z6.star_table),
            }
        )
    with pytest.raises(RingFormatError):
        ring_from_tables({"add": [[0]], "mul": [[0]]})


def test_star_is_an_involution_and_antihomomorphism(z6, m2z2):
    for ring in (z6, m2z2):
        for a in ring.elements():
            assert ring.star(ring.star(a)) == a
            for b in ring.elements():
                assert ring.star(ring.mul(a, b)) == ring.mul(ring.star(b), ring.star(a))
                assert ring.star(ring.add(a, b)) == ring.add(ring.star(a), ring.star(b))


def test_matrix_ring_star_is_the_transpose(m2z2):
    assert m2z2.star(E12) == E21
    assert m2z2.star(E11) == E11
    assert m2z2.mul(E12, E21) == E11
    assert m2z2.mul(E21, E12) == E22
    assert m2z2.one == IDENT


# -- frozen witness sets -------------------------------------------------------------


def test_wd_witness_sets_frozen(z6):
    assert z6.witness_set(2, InverseKind.WD).witnesses == (2, 5)
    assert ring_build("Zn:4").witness_set(2, InverseKind.WD).witnesses == ()
    assert z6.witness_set(3, InverseKind.MP).witnesses == (3,)


def test_m2z2_witness_sets_frozen(m2z2):
    assert m2z2.witness_set(E12, InverseKind.WD).witnesses == (
        4, 5, 6, 7, 12, 13, 14, 15,
    )
    assert m2z2.witness_set(E12, InverseKind.WDMP).witnesses == (4, 5)
    assert m2z2.witness_set(E12, InverseKind.MP).witnesses == (4,)
    assert m2z2.witness_set(E12, InverseKind.RIGHT_PSEUDO_CORE).witnesses == (0,)


def test_witness_set_module_wrapper(z6):
    assert witness_set(z6, 2, InverseKind.WD).witnesses == (2, 5)
    assert witness_set(z6, 2, InverseKind.WD, k=4).witnesses == (2, 5)


def test_witness_sets_are_cached(z6):
    first = z6.witness_set(2, InverseKind.WD)
    assert z6.witness_set(2, InverseKind.WD) is first


def test_wd_sets_grow_with_k_and_stabilize(m2z2):
    """At exponents above the index the wd system only loses constraints."""
    for a in m2z2.elements():
        ku = m2z2.k_used(a)
        at_k = set(m2z2.witness_set(a, InverseKind.WD, k=ku).witnesses)
        beyond = set(m2z2.witness_set(a, InverseKind.WD, k=ku + 1).witnesses)
        assert at_k <= beyond


def test_unique_kinds_have_singleton_sets_on_z6(z6):
    unique = (
        InverseKind.MP,
        InverseKind.DRAZIN,
        InverseKind.GROUP,
        InverseKind.CORE,
        InverseKind.PSEUDO_CORE,
        InverseKind.RIGHT_PSEUDO_CORE,
        InverseKind.DMP,
    )
    for a in z6.elements():
        for kind in unique:
            assert len(z6.witness_set(a, kind).witnesses) <= 1


def test_possesses_matches_witness_sets(z6):
    for a in z6.elements():
        assert z6.possesses(a, InverseKind.MP) == bool(
            z6.witness_set(a, InverseKind.MP).witnesses
        )


def test_witness_set_json(z6):
    data = z6.witness_set(2, InverseKind.WD).to_json()
    assert data == {"kind": "wd", "element": 2, "k": 1, "witnesses": [2, 5]}


# -- structural helpers ----------------------------------------------------------------


def test_properness():
    assert proper_check(ring_build("Zn:5"))
    assert proper_check(ring_build("Zn:6"))
    assert not proper_check(ring_build("Zn:4"))
    assert not proper_check(ring_build("Zn:8"))
    assert not proper_check(ring_build("Zn:12"))
    assert not proper_check(ring_build("M2:Z2"))


def test_annihilators_and_principal_ideals(z6):
    left, right = z6.annihilators(3)
    assert left == (0, 2, 4) and right == (0, 2, 4)
    assert z6.principal_left(3) == frozenset({0, 3})
    assert z6.principal_inclusion(3, 1, "left")
    assert not z6.principal_inclusion(1, 3, "left")


def test_idempotents_units_nilpotents(z6, m2z2):
    assert z6.idempotents() == (0, 1, 3, 4)
    assert z6.units == frozenset({1, 5})
    assert not z6.nilpotent(2)
    assert m2z2.nilpotent(E12)
    assert ring_build("Zn:4").nilpotent(2)


def test_commutants(z6, m2z2):
    assert z6.comm_set(3) == tuple(z6.elements())  # commutative ring
    assert E12 not in m2z2.comm_set(E11)
    for b in m2z2.comm2_set(E12):
        for c in m2z2.comm_set(E12):
            assert m2z2.mul(b, c) == m2z2.mul(c, b)


def test_quasinilpotent_and_hirano(z6):
    assert z6.quasinilpotent_check(0)
    assert not z6.quasinilpotent_check(2)
    assert z6.hirano_witness_set(2).witnesses == (2,)
    # hirano existence tracks nilpotency of a - a^3 (here: exhaustively)
    for a in z6.elements():
        delta = z6.sub(a, z6.power(a, 3))
        assert bool(z6.hirano_witness_set(a).witnesses) == z6.nilpotent(delta)


def test_mp_drazin_group_shortcuts(z6):
    assert z6.mp_of(3) == 3
    assert z6.drazin_of(2) == 2  # 2*4*2=16=4 -> check by definition below
    d = z6.drazin_of(2)
    k = z6.k_used(2)
    ak = z6.power(2, k)
    assert z6.mul(z6.mul(d, ak), 2) == ak
    assert z6.mul(2, d) == z6.mul(d, 2)
    assert z6.mul(2, z6.mul(d, d)) == d
