from collections import Counter

import pytest
from hypothesis import given
from hypothesis import strategies as st

from boson_ordering.bijections import (
    E,
    InvalidPartitionError,
    InvalidVectorError,
    contraction_to_partition,
    e_count,
    enumerate_Fn,
    enumerate_Fnk,
    format_partition,
    format_vector,
    lemma1_forward,
    lemma1_inverse,
    lemma2_forward,
    lemma2_inverse,
    parse_partition,
    parse_vector,
    partition_to_contraction,
    rises,
    set_partitions,
    validate_vector,
)
from boson_ordering.contractions import Contraction, enumerate_contractions, p_degree, r_degree
from boson_ordering.stirling import bell_number, stirling2, stirling_knm
from boson_ordering.words import number_operator_word
from oracles import brute_pointer_vectors, restricted_growth_partitions


def test_F2_has_five_vectors():
    assert list(enumerate_Fn(2)) == [(E, E), (E, 2), (1, E), (1, 2), (2, E)]


@pytest.mark.parametrize("n", range(0, 7))
def test_Fn_matches_filtered_product(n):
    assert sorted(enumerate_Fn(n), key=repr) == sorted(brute_pointer_vectors(n), key=repr)


@pytest.mark.parametrize("n", range(1, 9))
def test_Fnk_cardinality(n):
    for k in range(1, n + 1):
        assert sum(1 for _ in enumerate_Fnk(n - 1, k - 1)) == stirling2(n, k)


def test_vector_validation():
    with pytest.raises(InvalidVectorError):
        validate_vector((2, 2, E))
    with pytest.raises(InvalidVectorError):
        validate_vector((E, 1))
    with pytest.raises(InvalidVectorError):
        parse_vector("1,x")
    with pytest.raises(ValueError):
        list(enumerate_Fnk(2, 3))


def test_lemma1_examples():
    assert lemma1_forward((1, E, 3, E)) == ((1, 2), (3, 4), (5,))
    assert lemma1_forward((E, E)) == ((1,), (2,), (3,))
    assert lemma1_forward((2, E)) == ((1, 3), (2,))
    assert lemma1_inverse([[1, 2, 3]]) == (1, 2)
    assert lemma1_forward(()) == ((1,),)


def test_lemma2_examples():
    # (a†a)^2 = d a d a: the only edge joins annihilator 2 to creator 3
    assert lemma2_forward(Contraction.parse("2-3"), 2) == (1,)
    assert lemma2_forward(Contraction.parse(""), 2) == (E,)
    assert lemma2_inverse((1, 2)) == Contraction.parse("2-3,4-5")
    assert lemma2_inverse((2, E)) == Contraction.parse("2-5")


def test_partition_validation():
    with pytest.raises(InvalidPartitionError):
        parse_partition("{1,2},{2,3}")
    with pytest.raises(InvalidPartitionError):
        parse_partition("{1},{3}")
    with pytest.raises(InvalidPartitionError):
        parse_partition("{1,2")


def test_text_formats():
    assert format_vector((1, E, 3, E)) == "1,e,3,e"
    assert parse_vector("1,e,3,e") == (1, E, 3, E)
    assert parse_vector("()") == ()
    assert format_partition(((1, 2), (3, 4), (5,))) == "{1,2},{3,4},{5}"
    assert parse_partition("{3,4},{5},{2,1}") == ((1, 2), (3, 4), (5,))


@pytest.mark.parametrize("n", range(0, 9))
def test_set_partitions_complete(n):
    ours = list(set_partitions(n))
    assert len(ours) == len(set(ours)) == bell_number(n)
    brute = {tuple(sorted(tuple(b) for b in p)) for p in restricted_growth_partitions(n)}
    assert set(ours) == brute


@pytest.mark.parametrize("n", range(1, 8))
def test_round_trips(n):
    for part in set_partitions(n):
        assert lemma1_forward(lemma1_inverse(part)) == part
        assert contraction_to_partition(partition_to_contraction(part), n) == part
    for v in enumerate_Fn(n - 1):
        assert lemma1_inverse(lemma1_forward(v)) == v
        assert lemma2_forward(lemma2_inverse(v), n) == v
    for c in enumerate_contractions(number_operator_word(n)):
        assert lemma2_inverse(lemma2_forward(c, n)) == c


@pytest.mark.parametrize("n", range(1, 8))
def test_statistics_transport(n):
    joint = Counter()
    for c in enumerate_contractions(number_operator_word(n)):
        part = contraction_to_partition(c, n)
        assert len(part) == n - r_degree(c)
        assert rises(part) == p_degree(c)
        assert e_count(lemma2_forward(c, n)) == len(part) - 1
        joint[(len(part), rises(part))] += 1
    assert joint == Counter({(k, m): stirling_knm(n, k, m) for k in range(1, n + 1)
                             for m in range(n) if stirling_knm(n, k, m)})


@given(st.integers(min_value=1, max_value=7).flatmap(
    lambda n: st.permutations(range(1, n + 1)).map(lambda perm: (n, perm))),
    st.data())
def test_random_partition_round_trip(n_perm, data):
    n, perm = n_perm
    cuts = data.draw(st.sets(st.integers(min_value=1, max_value=n - 1))) if n > 1 else set()
    blocks, start = [], 0
    for cut in sorted(cuts) + [n]:
        blocks.append(perm[start:cut])
        start = cut
    part = parse_partition(",".join("{" + ",".join(map(str, b)) + "}" for b in blocks))
    assert lemma1_forward(lemma1_inverse(part)) == part
    assert parse_partition(format_partition(part)) == part
