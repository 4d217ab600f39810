import random

import pytest

from braidchi.diagrams import augment
from braidchi.fixtures import (
    entrance_only_diagram,
    lonely_strand_diagram,
    rectangle_diagram,
    stacked_diagram,
)
from braidchi.oracle import (
    OracleCapError,
    brute_force_components,
    brute_force_inf,
    is_positive_element,
    words_equal,
)
from braidchi.words import BraidWord, parse_word


def test_reversing_positivity_basics():
    assert is_positive_element(parse_word("", 3))
    assert is_positive_element(parse_word("1 2 1", 3))
    assert is_positive_element(parse_word("1 -1", 2))
    assert is_positive_element(parse_word("2 -2 1", 3))
    assert not is_positive_element(parse_word("-1", 2))
    assert not is_positive_element(parse_word("1 -2", 3))
    assert not is_positive_element(parse_word("2 -1 -1 2", 3))


def test_words_equal_braid_relations():
    assert words_equal(parse_word("1 2 1", 3), parse_word("2 1 2", 3))
    assert words_equal(parse_word("1 3", 4), parse_word("3 1", 4))
    assert not words_equal(parse_word("1", 3), parse_word("2", 3))
    assert words_equal(parse_word("1 -1", 2), parse_word("", 2))


def test_brute_force_inf_reference_points():
    assert brute_force_inf(parse_word("1 2 1", 3)) == 1
    assert brute_force_inf(parse_word("", 3)) == 0
    assert brute_force_inf(parse_word("-1", 2)) == -1
    assert brute_force_inf(parse_word("-1 -1", 2)) == -2
    assert brute_force_inf(parse_word("1 2", 3)) == 0


def test_brute_force_inf_caps():
    with pytest.raises(OracleCapError):
        brute_force_inf(BraidWord(5, (1,)))
    with pytest.raises(OracleCapError):
        brute_force_inf(BraidWord(3, (1,) * 7))


def test_components_on_rectangle():
    b = augment(rectangle_diagram())
    comps = brute_force_components(b)
    # the trapped middle cell: a one-cell interior with euler -1, proper
    middle = next(c for c in comps if (((5, 5),)) in c.cells)
    assert middle.euler == -1 and middle.proper
    assert len(middle.cells) == 1
    proper_nonzero = [c for c in comps if c.proper and c.euler != 0]
    assert proper_nonzero == [middle]


def test_components_entrance_only_trap():
    b = augment(entrance_only_diagram())
    comps = brute_force_components(b)
    middle = next(c for c in comps if (((5, 5),)) in c.cells)
    assert middle.euler == 1 and middle.proper


def test_components_lonely_strand_improper():
    b = augment(lonely_strand_diagram())
    comps = brute_force_components(b)
    assert all(not c.proper for c in comps)


def test_component_caps():
    with pytest.raises(OracleCapError):
        brute_force_components(augment(stacked_diagram()))  # three free strands
