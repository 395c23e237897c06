import pytest

from conftest import A2, C3, GALLERY_GROUPS, LEX, MIX
from lgroup import (
    AtomIdeal,
    LexIdeal,
    ProdIdeal,
    ShapeMismatch,
    all_ideal,
    congruent,
    contains,
    elements_in_box,
    enumerate_ideals,
    generated_ideal,
    ideal_join,
    ideal_lattice_op,
    ideal_leq,
    ideal_meet,
    is_all_ideal,
    is_proper,
    is_zero_ideal,
    principal_ideal,
    quotient,
    zero_ideal,
)

LEX_BOTTOM_ALL = LexIdeal(AtomIdeal(True))  # {0} x Z inside Z x-> Z


def test_contains_lex_examples():
    assert contains(LEX.structure, LEX_BOTTOM_ALL, (0, -7))
    assert not contains(LEX.structure, LEX_BOTTOM_ALL, (1, 0))
    for G in GALLERY_GROUPS.values():
        assert contains(G.structure, zero_ideal(G.structure), G.zero())


def test_contains_shape_mismatch():
    with pytest.raises(ShapeMismatch):
        contains(LEX.structure, AtomIdeal(True), (0, 0))


def test_principal_ideal_examples():
    assert principal_ideal(LEX.structure, (1, 0)) == all_ideal(LEX.structure)
    assert principal_ideal(LEX.structure, (0, 4)) == LEX_BOTTOM_ALL
    for G in GALLERY_GROUPS.values():
        assert is_zero_ideal(principal_ideal(G.structure, G.zero()))


def test_principal_ideal_is_least_containing_exhaustive():
    # oracle: against the full enumerated lattice, membership of g in I
    # must coincide with <g> below I
    for G in (LEX, A2, MIX):
        lattice = enumerate_ideals(G)
        for g in elements_in_box(G.structure, 2):
            P = principal_ideal(G.structure, g)
            for I in lattice.ideals:
                assert contains(G.structure, I, g) == ideal_leq(P, I)


def test_generated_ideal_examples():
    assert generated_ideal(LEX.structure, [(0, 1), (1, 0)]) == all_ideal(LEX.structure)
    out = generated_ideal(C3.structure, [(1, 0, 0), (0, 0, 1)])
    assert out == ProdIdeal((AtomIdeal(True), AtomIdeal(False), AtomIdeal(True)))
    assert is_zero_ideal(generated_ideal(A2.structure, []))


def test_lattice_op_examples():
    i1 = ProdIdeal((AtomIdeal(False), AtomIdeal(True), AtomIdeal(False)))
    i2 = ProdIdeal((AtomIdeal(False), AtomIdeal(False), AtomIdeal(True)))
    joined = ideal_lattice_op(C3, "join", i1, i2)
    assert joined == ProdIdeal((AtomIdeal(False), AtomIdeal(True), AtomIdeal(True)))
    assert ideal_lattice_op(LEX, "join", LEX_BOTTOM_ALL, zero_ideal(LEX.structure)) == LEX_BOTTOM_ALL
    for G in GALLERY_GROUPS.values():
        for I in enumerate_ideals(G).ideals:
            assert ideal_meet(I, all_ideal(G.structure)) == I


def test_enumeration_counts():
    assert len(enumerate_ideals(LEX)) == 3
    assert sum(1 for I in enumerate_ideals(LEX).ideals if is_proper(I)) == 2
    assert len(enumerate_ideals(A2)) == 4
    assert len(enumerate_ideals(MIX)) == 6


def test_enumeration_order_and_principality():
    for G in GALLERY_GROUPS.values():
        lattice = enumerate_ideals(G)
        assert is_zero_ideal(lattice.bottom)
        assert is_all_ideal(lattice.top)
        assert all(lattice.principal)
        for I, g in zip(lattice.ideals, lattice.generators):
            assert principal_ideal(G.structure, g) == I


def test_quotient_examples():
    q = quotient(LEX, LEX_BOTTOM_ALL)
    assert repr(q.group.structure) == "Z" and q.group.unit == 1
    assert q.project((7, -9)) == 7

    q = quotient(C3, ProdIdeal((AtomIdeal(False), AtomIdeal(True), AtomIdeal(False))))
    assert repr(q.group.structure) == "Prod(Z, Z)"
    assert q.group.unit == (1, 1)
    assert q.project((4, 5, 6)) == (4, 6)

    q = quotient(MIX, zero_ideal(MIX.structure))
    assert q.group.structure == MIX.structure and q.group.unit == MIX.unit
    assert q.project((2, (3, 4))) == (2, (3, 4))

    q = quotient(A2, all_ideal(A2.structure))
    assert q.trivial and q.group is None


def test_congruence_examples():
    assert congruent(LEX, (0, 0), (0, 1), LEX_BOTTOM_ALL)
    assert not congruent(LEX, (0, 0), (0, 1), zero_ideal(LEX.structure))
    for G in GALLERY_GROUPS.values():
        for I in enumerate_ideals(G).ideals:
            assert congruent(G, G.unit, G.unit, I)


def test_ideal_lattice_distributivity_exhaustive():
    for G in GALLERY_GROUPS.values():
        ideals = enumerate_ideals(G).ideals
        for I in ideals:
            for J in ideals:
                for K in ideals:
                    assert ideal_meet(I, ideal_join(J, K)) == ideal_join(
                        ideal_meet(I, J), ideal_meet(I, K)
                    )


def test_quotient_lattice_matches_upper_interval():
    # the ideals of G/I correspond one to one with the ideals above I
    for G in GALLERY_GROUPS.values():
        lattice = enumerate_ideals(G)
        for I in lattice.ideals:
            interval = [J for J in lattice.ideals if ideal_leq(I, J)]
            q = quotient(G, I)
            if q.trivial:
                assert interval == [all_ideal(G.structure)]
                continue
            mapped = [q.project_ideal(J) for J in interval]
            assert len(set(mapped)) == len(mapped)
            assert set(mapped) == set(enumerate_ideals(q.group).ideals)
            for J1, M1 in zip(interval, mapped):
                for J2, M2 in zip(interval, mapped):
                    assert ideal_leq(J1, J2) == ideal_leq(M1, M2)


def test_join_membership_has_additive_witnesses():
    # members of I v J split as sums; sums of members stay in the join
    from lgroup import riesz_split

    for G in (A2, LEX, MIX):
        ideals = enumerate_ideals(G).ideals
        box = list(elements_in_box(G.structure, 1))
        for I in ideals:
            for J in ideals:
                joined = ideal_join(I, J)
                for d in box:
                    if contains(G.structure, joined, d):
                        a, b = riesz_split(G, d, I, J)
                        assert contains(G.structure, I, a)
                        assert contains(G.structure, J, b)
                        assert G.add(a, b) == d
                for a in box:
                    if not contains(G.structure, I, a):
                        continue
                    for b in box:
                        if contains(G.structure, J, b):
                            assert contains(G.structure, joined, G.add(a, b))
