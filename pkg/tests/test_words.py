import pytest
from hypothesis import given
from hypothesis import strategies as st

from boson_ordering.words import (
    A,
    C,
    Word,
    WordSyntaxError,
    number_operator_word,
    parse_word,
    word_counts,
)


@pytest.mark.parametrize("text, letters", [
    ("aadd", [A, A, C, C]),
    ("(da)^3", [C, A, C, A, C, A]),
    ("a^2 d^3", [A, A, C, C, C]),
    ("((ad)^2 d)^2", [A, C, A, C, C] * 2),
    ("  a  d ", [A, C]),
])
def test_parse_expands(text, letters):
    assert parse_word(text) == Word(tuple(letters))


@pytest.mark.parametrize("text, offset", [
    ("", 1),
    ("ab", 2),
    ("(da", 4),
    ("(da)", 5),
    ("a^0", 3),
    ("a^", 3),
    ("d^4294967296", 3),
    (")", 1),
])
def test_parse_errors_report_offset(text, offset):
    with pytest.raises(WordSyntaxError) as exc:
        parse_word(text)
    assert exc.value.offset == offset


def test_parse_rejects_huge_expansion():
    with pytest.raises(WordSyntaxError):
        parse_word("(da)^2147483647")


def test_number_operator_word():
    assert number_operator_word(1) == Word((C, A))
    assert number_operator_word(3) == parse_word("dadada")
    w = number_operator_word(4)
    assert len(w) == 8
    assert all(w[i] is C for i in range(1, 9, 2))
    assert all(w[i] is A for i in range(2, 9, 2))
    with pytest.raises(ValueError):
        number_operator_word(0)


def test_word_counts():
    assert word_counts(parse_word("aadd")) == (2, 2)
    assert word_counts(Word()) == (0, 0)
    assert word_counts(parse_word("(da)^3")) == (3, 3)


def test_positions_are_one_based():
    w = parse_word("ad")
    assert w[1] is A and w[2] is C
    with pytest.raises(IndexError):
        w[0]


@given(st.lists(st.sampled_from([A, C]), min_size=1, max_size=40))
def test_render_round_trip(letters):
    w = Word(tuple(letters))
    assert parse_word(w.render()) == w


def test_pretty_uses_dagger():
    assert parse_word("ad").pretty() == "a a†"
