from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from boson_ordering.contractions import (
    CapacityError,
    Contraction,
    InvalidContractionError,
    contraction_multiset,
    contraction_word,
    count_contractions,
    crossing_number,
    double_dot,
    enumerate_contractions,
    p_degree,
    r_degree,
)
from boson_ordering.stirling import bell_number
from boson_ordering.words import Word, number_operator_word, parse_word, word_counts
from oracles import brute_contractions, brute_crossings

words = st.text(alphabet="ad", min_size=1, max_size=9)


def edge_sets(w):
    return [tuple(tuple(e) for e in c.edges) for c in enumerate_contractions(w)]


def test_aadd_has_the_seven_diagrams():
    got = edge_sets(parse_word("aadd"))
    assert sorted(got) == sorted([(), ((1, 3),), ((1, 4),), ((2, 3),), ((2, 4),),
                                  ((1, 4), (2, 3)), ((1, 3), (2, 4))])


def test_enumeration_is_lexicographic():
    got = edge_sets(parse_word("aadd"))
    assert got == sorted(got)
    assert got[0] == ()


def test_single_letter_has_only_null():
    assert edge_sets(parse_word("a")) == [()]
    assert edge_sets(parse_word("d")) == [()]


def test_number_operator_cube():
    assert len(edge_sets(parse_word("(da)^3"))) == 5


@pytest.mark.parametrize("text, expected", [("aadd", 7), ("adad", 5), ("(da)^4", 15)])
def test_count_contractions(text, expected):
    assert count_contractions(parse_word(text)) == expected


def test_adad_out_of_order_pairing_is_rejected():
    # pairing the second a (position 3) with the first a† (position 2)
    with pytest.raises(InvalidContractionError):
        Contraction(((1, 4), (3, 2)))


@pytest.mark.parametrize("n", range(1, 11))
def test_count_of_number_operator_power_is_bell(n):
    assert count_contractions(number_operator_word(n)) == bell_number(n)


@settings(max_examples=60, deadline=None)
@given(words)
def test_enumeration_matches_brute_force(text):
    w = parse_word(text)
    got = edge_sets(w)
    assert len(got) == len(set(got))
    assert sorted(got) == sorted(brute_contractions(text))
    assert count_contractions(w) == len(got)


def test_enumeration_is_deterministic():
    w = parse_word("(da)^5")
    assert edge_sets(w) == edge_sets(w)


def test_guard():
    w = number_operator_word(6)
    with pytest.raises(CapacityError) as exc:
        list(enumerate_contractions(w, guard=100))
    assert exc.value.estimated == 203
    assert len(list(enumerate_contractions(w, guard=None))) == 203


@pytest.mark.parametrize("edges, expected", [
    ([(2, 3)], "apd"),
    ([(1, 4), (2, 3)], "epE"),
    ([(1, 3), (2, 4)], "eeEE"),
    ([], "aadd"),
])
def test_contraction_word_aadd(edges, expected):
    assert contraction_word(parse_word("aadd"), Contraction(tuple(edges))) == expected


def test_contraction_multiset_aadd():
    assert contraction_multiset(parse_word("aadd")) == Counter(
        ["aadd", "eaEd", "eadE", "apd", "aedE", "epE", "eeEE"])


def test_contraction_words_collide_first_at_n5():
    for n in range(1, 5):
        assert max(contraction_multiset(number_operator_word(n)).values()) == 1
    ms = contraction_multiset(number_operator_word(5))
    assert ms["dededaEaEa"] == 2  # {2-7,4-9} and {2-9,4-7}


@pytest.mark.parametrize("cw, expected", [("apd", (1, 1, 1)), ("adad", (2, 2, 0)),
                                          ("eeEE", (0, 0, 0))])
def test_double_dot(cw, expected):
    assert double_dot(cw) == expected


def test_invalid_contractions():
    w = parse_word("aadd")
    with pytest.raises(InvalidContractionError):
        Contraction(((1, 3), (2, 3)))
    with pytest.raises(InvalidContractionError):
        Contraction(((3, 4),)).validate(w)
    with pytest.raises(InvalidContractionError):
        contraction_word(w, Contraction(((1, 5),)))


def test_statistics():
    assert r_degree(Contraction()) == 0
    assert r_degree(Contraction(((2, 3), (4, 5)))) == 2
    assert p_degree(Contraction(((2, 3), (4, 5)))) == 2
    assert p_degree(Contraction(((2, 5),))) == 0
    assert crossing_number(Contraction(((1, 3), (2, 4)))) == 1
    assert crossing_number(Contraction(((2, 5), (4, 7)))) == 1
    assert crossing_number(Contraction(((1, 4), (2, 3)))) == 0
    for c in enumerate_contractions(parse_word("aadd")):
        if r_degree(c) == 2:
            assert len(c) == 2


@settings(max_examples=60, deadline=None)
@given(words)
def test_statistics_invariants(text):
    w = parse_word(text)
    n_a, n_c = word_counts(w)
    for c in enumerate_contractions(w):
        d = r_degree(c)
        dd = double_dot(contraction_word(w, c))
        assert dd == (n_c - d, n_a - d, p_degree(c))
        assert p_degree(c) <= d
        assert crossing_number(c) == brute_crossings(c.edges)
        if d <= 1:
            assert crossing_number(c) == 0


def test_text_form_round_trip():
    c = Contraction.parse("2-3, 4-5")
    assert c == Contraction(((2, 3), (4, 5)))
    assert str(c) == "2-3,4-5"
    assert Contraction.parse("") == Contraction()
    with pytest.raises(InvalidContractionError):
        Contraction.parse("2:3")


def test_empty_word():
    assert count_contractions(Word()) == 1
    assert edge_sets(Word()) == [()]
