from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from lgrdual.bbw import bbw_weight, cohomology
from lgrdual.diagrams import YoungDiagram
from lgrdual.ktheory import kclass_F
from lgrdual.notation import (
    bbw_from_json,
    bbw_to_json,
    character_from_json,
    character_to_json,
    format_diagram,
    format_fraction,
    format_weight,
    kclass_from_json,
    kclass_to_json,
    parse_bundle,
    parse_diagram,
    parse_fraction,
    parse_weight,
    vectors_from_json,
    vectors_to_json,
)
from lgrdual.schur import GLWeight

Y = YoungDiagram
W = GLWeight


@pytest.mark.parametrize("text, rows", [("(3,1)", (3, 1)), ("()", ()), (" ( 2 , 2 ) ", (2, 2)), ("(4,0)", (4,))])
def test_parse_diagram(text, rows):
    assert parse_diagram(text) == Y(rows)


@pytest.mark.parametrize("text", ["(1,2)", "3,1", "(a)", "[1]", "(1,,2)", "(-1)"])
def test_parse_diagram_rejects(text):
    with pytest.raises(ValueError):
        parse_diagram(text)


def test_parse_weight_and_bundle():
    assert parse_weight("[2, 0,-1]") == W((2, 0, -1))
    for bad in ["[]", "[0,1]", "(1)", "[1.5]"]:
        with pytest.raises(ValueError):
            parse_weight(bad)
    assert parse_bundle("(2)", 3) == W((2, 0, 0))
    assert parse_bundle("[1,0]") == W((1, 0))
    with pytest.raises(ValueError):
        parse_bundle("(2)")
    with pytest.raises(ValueError):
        parse_bundle("[1,0]", 3)


diagrams = st.lists(st.integers(1, 9), max_size=5).map(lambda xs: Y(sorted(xs, reverse=True)))
weights = st.lists(st.integers(-9, 9), min_size=1, max_size=5).map(lambda xs: W(sorted(xs, reverse=True)))


@given(diagrams)
def test_diagram_round_trip(lam):
    assert parse_diagram(format_diagram(lam)) == lam


@given(weights)
def test_weight_round_trip(w):
    assert parse_weight(format_weight(w)) == w


@given(st.fractions())
def test_fraction_round_trip(x):
    assert parse_fraction(format_fraction(x)) == x


def test_fraction_format():
    assert format_fraction(Fraction(4, 2)) == 2
    assert format_fraction(Fraction(-1, 3)) == "-1/3"


def test_result_round_trips():
    for w in [W((2, 0, 0)), W((1, 0)), W((0, 0, -2))]:
        assert bbw_from_json(bbw_to_json(bbw_weight(w))) == bbw_weight(w)
        assert character_from_json(character_to_json(cohomology(w))) == cohomology(w)
    A = kclass_F((3, 1), 5)
    assert kclass_from_json(kclass_to_json(A)) == A
    vs = [(Fraction(1), Fraction(-2, 3))]
    assert vectors_from_json(vectors_to_json(vs)) == vs
