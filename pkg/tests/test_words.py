import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from braidchi.words import (
    BraidWord,
    FreeLabelError,
    GeneratorRangeError,
    NormalForm,
    WordSyntaxError,
    conjugacy_certificate,
    exponent_sum,
    left_normal_form,
    minimal_positive_twists,
    parse_word,
    permutation_of,
)
from braidchi.oracle import brute_force_inf, is_positive_element, words_equal


def test_parse_basic():
    assert parse_word("1 2 -1", 3).letters == (1, 2, -1)
    assert parse_word("", 2).letters == ()


def test_parse_rejects_out_of_range():
    with pytest.raises(GeneratorRangeError):
        parse_word("3", 3)
    with pytest.raises(WordSyntaxError):
        parse_word("1 x", 3)
    with pytest.raises(WordSyntaxError):
        BraidWord(3, (0,))


def test_free_labels_must_close():
    # sigma_1 closes the two strands into one component
    with pytest.raises(FreeLabelError):
        parse_word("1", 2, free_labels=[0])
    w = parse_word("2", 3, free_labels=[0])
    assert w.skeleton_labels == frozenset({1, 2})


def test_permutation_convention():
    # left-to-right action on positions, pinned by this test
    assert permutation_of(parse_word("1", 2)) == (1, 0)
    assert permutation_of(parse_word("", 4)) == (0, 1, 2, 3)
    assert permutation_of(parse_word("1 2", 3)) == (2, 0, 1)


def test_exponent_sum():
    assert exponent_sum(parse_word("1 -1", 2)) == 0
    assert exponent_sum(parse_word("1 2 1", 3)) == 3
    assert exponent_sum(parse_word("1 2 1 1 2 1", 3)) == 6


def test_left_normal_form_pinned_cases():
    nf = left_normal_form(parse_word("1 2 1", 3))
    assert (nf.inf, nf.factors) == (1, ())
    nf = left_normal_form(parse_word("-1", 2))
    assert (nf.inf, nf.factors) == (-1, ())
    nf = left_normal_form(parse_word("", 3))
    assert (nf.inf, nf.factors) == (0, ())


def test_normal_form_reconstruction_roundtrip():
    rng = random.Random(5)
    gens = lambda k: [g for g in range(-(k - 1), k) if g]
    for _ in range(250):
        k = rng.choice([2, 3, 4])
        letters = tuple(rng.choice(gens(k)) for _ in range(rng.randrange(0, 7)))
        w = BraidWord(k, letters)
        nf = left_normal_form(w)
        again = left_normal_form(nf.to_word())
        assert nf == again
        assert words_equal(w, nf.to_word())


def test_factors_are_left_weighted_nontrivial():
    rng = random.Random(11)
    for _ in range(200):
        k = rng.choice([3, 4])
        letters = tuple(rng.choice([g for g in range(-(k - 1), k) if g]) for _ in range(6))
        nf = left_normal_form(BraidWord(k, letters))
        ident = tuple(range(k))
        longest = tuple(reversed(range(k)))
        for f in nf.factors:
            assert f != ident and f != longest


def test_minimal_positive_twists_cases():
    l, p = minimal_positive_twists(parse_word("1 2", 3))
    assert l == 0 and words_equal(p, parse_word("1 2", 3))
    l, p = minimal_positive_twists(parse_word("-1", 2))
    assert l == 1 and p.letters == (1,)
    l, p = minimal_positive_twists(parse_word("-2", 3))
    assert l == 1 and all(g > 0 for g in p.letters)
    assert words_equal(p, parse_word("-2 1 2 1 1 2 1", 3))


def test_twists_preserve_permutation_and_exponent():
    rng = random.Random(17)
    for _ in range(150):
        k = rng.choice([2, 3, 4])
        letters = tuple(rng.choice([g for g in range(-(k - 1), k) if g]) for _ in range(rng.randrange(0, 7)))
        w = BraidWord(k, letters)
        l, p = minimal_positive_twists(w)
        assert all(g > 0 for g in p.letters)
        assert permutation_of(p) == permutation_of(w)
        assert exponent_sum(p) == exponent_sum(w) + l * k * (k - 1)
        nf = left_normal_form(w)
        assert l == (max(0, -nf.inf) + 1) // 2


def test_certificate_examples():
    assert conjugacy_certificate(parse_word("1 2", 3)) == conjugacy_certificate(parse_word("2 1", 3))
    assert conjugacy_certificate(parse_word("1", 2)) != conjugacy_certificate(parse_word("-1", 2))
    token = conjugacy_certificate(parse_word("", 3))
    assert token == conjugacy_certificate(parse_word("", 3))


def test_certificate_distinguishes_cycle_types():
    a = conjugacy_certificate(parse_word("2", 3, free_labels=[0]))
    b = conjugacy_certificate(parse_word("", 3, free_labels=[0]))
    assert a != b


@settings(max_examples=120, deadline=None)
@given(
    st.integers(min_value=2, max_value=4).flatmap(
        lambda k: st.tuples(
            st.just(k),
            st.lists(
                st.integers(min_value=-(k - 1), max_value=k - 1).filter(lambda g: g != 0),
                min_size=1,
                max_size=6,
            ),
            st.integers(min_value=0, max_value=5),
        )
    )
)
def test_certificate_cyclic_rotation_invariance(data):
    k, letters, shift = data
    r = shift % len(letters)
    w = BraidWord(k, tuple(letters))
    rotated = BraidWord(k, tuple(letters[r:] + letters[:r]))
    assert conjugacy_certificate(w) == conjugacy_certificate(rotated)


def test_certificate_free_cancellation_invariance():
    w = parse_word("1 -1 2", 3)
    v = parse_word("2", 3)
    assert conjugacy_certificate(w) == conjugacy_certificate(v)


def test_inf_matches_oracle_on_random_words():
    rng = random.Random(23)
    for _ in range(200):
        k = rng.choice([2, 3, 4])
        letters = tuple(rng.choice([g for g in range(-(k - 1), k) if g]) for _ in range(rng.randrange(0, 7)))
        w = BraidWord(k, letters)
        assert left_normal_form(w).inf == brute_force_inf(w)


def test_positivity_iff_nonnegative_inf():
    rng = random.Random(29)
    for _ in range(200):
        k = rng.choice([2, 3, 4])
        letters = tuple(rng.choice([g for g in range(-(k - 1), k) if g]) for _ in range(rng.randrange(0, 6)))
        w = BraidWord(k, letters)
        assert (left_normal_form(w).inf >= 0) == is_positive_element(w)
