import pytest
from hypothesis import given, strategies as st

from lgrdual.diagrams import (
    FrobeniusCoordinates,
    YoungDiagram,
    balanced_criterion_check,
    contains,
    covers,
    diagrams_in_box,
    enumerate_balanced,
    enumerate_poset,
    frobenius,
    from_frobenius,
    is_balanced,
    partitions_of,
    subdiagrams,
    transpose,
)
from oracles import all_partitions, balanced_by_boxes, grid_transpose

Y = YoungDiagram

partitions = st.lists(st.integers(1, 7), max_size=7).map(lambda xs: Y(sorted(xs, reverse=True)))


def test_young_diagram_normalises_and_validates():
    assert Y((3, 1, 0, 0)) == Y((3, 1))
    assert Y(()).size == 0
    with pytest.raises(ValueError):
        Y((1, 2))
    with pytest.raises(ValueError):
        Y((2, -1))
    lam = Y((3, 2, 2, 1))
    assert (lam.size, lam.height, lam.width, lam.rank) == (8, 4, 3, 2)
    assert str(lam) == "(3,2,2,1)" and str(Y()) == "()"
    assert lam.padded(6) == (3, 2, 2, 1, 0, 0)
    assert lam.fits(4, 3) and not lam.fits(3, 3)


@pytest.mark.parametrize(
    "lam, expected",
    [((3, 2, 2, 1), (4, 3, 1)), ((), ()), ((3, 1), (2, 1, 1))],
)
def test_transpose_examples(lam, expected):
    assert transpose(Y(lam)) == Y(expected)
    assert grid_transpose(lam) == expected


@given(partitions)
def test_transpose_matches_box_grid_and_is_involution(lam):
    assert tuple(transpose(lam)) == grid_transpose(lam)
    assert transpose(transpose(lam)) == lam


@pytest.mark.parametrize(
    "lam, arms, legs",
    [((3, 2, 2, 1), (3, 1), (4, 2)), ((1,), (1,), (1,)), ((3, 3), (3, 2), (2, 1)), ((), (), ())],
)
def test_frobenius_examples(lam, arms, legs):
    f = frobenius(Y(lam))
    assert f == FrobeniusCoordinates(arms, legs)
    assert from_frobenius(f) == Y(lam)


def test_frobenius_str():
    assert str(frobenius(Y((3, 2, 2, 1)))) == "(3,1|4,2)"


@given(partitions)
def test_frobenius_round_trip(lam):
    f = frobenius(lam)
    assert f.rank == lam.rank
    assert sum(f.arms) + sum(f.legs) - f.rank == lam.size
    assert from_frobenius(f) == lam


def test_from_frobenius_rejects_invalid():
    with pytest.raises(ValueError):
        from_frobenius(((1, 2), (2, 1)))
    with pytest.raises(ValueError):
        from_frobenius(((2,), (1, 1)))


@pytest.mark.parametrize("lam, expected", [((2,), True), ((3, 1), True), ((1,), False), ((3, 3), True), ((2, 2), False)])
def test_is_balanced_examples(lam, expected):
    assert is_balanced(Y(lam)) is expected
    assert balanced_criterion_check(Y(lam)) is expected


@pytest.mark.parametrize("size", range(0, 13))
def test_balanced_matches_box_oracle(size):
    for rows in all_partitions(size):
        lam = Y(rows)
        assert is_balanced(lam) == balanced_by_boxes(rows) == balanced_criterion_check(lam)


@pytest.mark.parametrize(
    "boxes, expected",
    [(0, [()]), (2, [(2,)]), (4, [(3, 1)]), (6, [(4, 1, 1), (3, 3)])],
)
def test_enumerate_balanced_examples(boxes, expected):
    assert enumerate_balanced(boxes) == [Y(x) for x in expected]


@pytest.mark.parametrize("boxes", range(0, 21, 2))
def test_enumerate_balanced_matches_brute_force(boxes):
    brute = {Y(r) for r in all_partitions(boxes) if balanced_by_boxes(r)}
    got = enumerate_balanced(boxes)
    assert len(got) == len(set(got))
    assert set(got) == brute


def test_enumerate_balanced_bounds_and_errors():
    assert enumerate_balanced(6, max_height=2) == [Y((3, 3))]
    assert enumerate_balanced(6, max_width=3) == [Y((3, 3))]
    assert enumerate_balanced(2, max_height=0) == []
    with pytest.raises(ValueError):
        enumerate_balanced(3)
    with pytest.raises(ValueError):
        enumerate_balanced(-2)


def test_containment_and_covers():
    assert contains(Y((3, 1)), Y((2,)))
    assert not contains(Y((2,)), Y((1, 1, 1)))
    assert covers(Y((2,)), Y((1,)))
    assert not covers(Y((2,)), Y(()))
    assert not covers(Y((2,)), Y((1, 1)))


def test_poset_2x2():
    P = enumerate_poset(2, 2)
    assert set(P) == {Y(x) for x in [(), (1,), (2,), (1, 1), (2, 1), (2, 2)]}
    assert len(P) == 6
    assert P.grade(Y((2, 1))) == 3
    assert P.leq(Y((1,)), Y((2, 2)))
    assert not P.leq(Y((2,)), Y((1, 1)))
    assert set(P.rank_level(2)) == {Y((2,)), Y((1, 1))}
    assert len(P.cover_relations()) == 6


@given(st.integers(0, 4), st.integers(0, 4))
def test_poset_cardinality_is_binomial(h, w):
    from math import comb

    P = enumerate_poset(h, w)
    assert len(P) == comb(h + w, h)
    for a, b in P.cover_relations():
        assert covers(b, a) and P.grade(b) == P.grade(a) + 1


def test_box_and_partition_helpers():
    assert len(diagrams_in_box(2, 3)) == 10
    assert len(list(partitions_of(6))) == 11
    assert set(subdiagrams(Y((2, 1)))) == {Y(()), Y((1,)), Y((2,)), Y((1, 1)), Y((2, 1))}
