"""Property tests on transformation semigroups and free objects."""
import random

from hypothesis import assume, given, strategies as st

from oracles import (
    apply_sequence,
    generated_right_ideal,
    naive_annihilator,
    naive_closure,
    principal,
    relation_of,
    vector_multiples,
    vectors,
    word_multiples,
    words,
)
from wrcsemi.congruences import PairSet, annihilator, annihilator_generators, find_xsequence, generate_congruence
from wrcsemi.core import FreeCommutative, FreeMonoid, check_associative, format_table, parse_table_text, transformation_semigroup
from wrcsemi.ideals import intersect_principal
from wrcsemi.randomgen import random_semigroup
from wrcsemi.witnesses import regular_partner


@st.composite
def transformations(draw, with_identity=False):
    degree = draw(st.integers(1, 3))
    maps = st.lists(st.integers(0, degree - 1), min_size=degree, max_size=degree)
    gens = draw(st.lists(maps, min_size=1, max_size=2))
    S = transformation_semigroup(gens, degree, with_identity=with_identity, limit=12)
    assume(S is not None)
    return S


@st.composite
def with_pairs(draw, semigroups):
    S = draw(semigroups)
    elems = list(S.elements())
    pairs = draw(st.lists(st.tuples(st.sampled_from(elems), st.sampled_from(elems)), max_size=3))
    return S, pairs


@given(transformations())
def test_transformation_semigroups_are_associative(S):
    check_associative(S)


@given(with_pairs(transformations()))
def test_generated_congruence_matches_closure(case):
    S, pairs = case
    cong = generate_congruence(S, PairSet(S, pairs))
    assert relation_of(S, cong) == naive_closure(S, pairs)


@given(with_pairs(transformations()))
def test_xsequences_exist_exactly_for_related_pairs(case):
    S, pairs = case
    X = PairSet(S, pairs)
    rel = naive_closure(S, pairs)
    elems = list(S.elements())
    for a in elems[:4]:
        for b in elems[:4]:
            seq = find_xsequence(S, X, a, b)
            assert (seq is not None) == ((a, b) in rel)
            if seq is not None:
                assert seq.source == a and apply_sequence(S, seq) == b


@given(transformations(with_identity=True))
def test_annihilator_generators_generate_annihilator(S):
    for a in S.elements():
        X = annihilator_generators(S, a)
        assert naive_closure(S, X.generators()) == naive_annihilator(S, a)
        assert relation_of(S, annihilator(S, a)) == naive_annihilator(S, a)


@given(transformations())
def test_principal_intersections(S):
    elems = list(S.elements())
    for a in elems:
        for b in elems:
            I = intersect_principal(S, a, b)
            assert generated_right_ideal(S, I.generators) == principal(S, a) & principal(S, b)


@given(transformations())
def test_table_text_round_trip(S):
    T = parse_table_text(format_table(S))
    assert [T.format(x) for x in T.elements()] == [S.format(x) for x in S.elements()]
    for x in S.elements():
        for y in S.elements():
            assert T.format(T.mul(T.parse(S.format(x)), T.parse(S.format(y)))) == S.format(S.mul(x, y))


@given(st.integers(0, 10 ** 6))
def test_random_tables_are_associative(seed):
    S = random_semigroup(random.Random(seed), 5)
    check_associative(S)


@given(transformations())
def test_regular_partner_is_correct(S):
    for a in S.elements():
        b = regular_partner(S, a)
        if b is not None:
            assert S.mul(S.mul(a, b), a) == a


@given(st.text("ab", max_size=3), st.text("ab", max_size=3))
def test_free_monoid_intersections(a, b):
    F = FreeMonoid("ab")
    universe = words("ab", 6)
    I = intersect_principal(F, a, b)
    got = set()
    for g in I.generators:
        got |= word_multiples(g, universe)
    assert got == word_multiples(a, universe) & word_multiples(b, universe)


@given(st.lists(st.integers(0, 2), min_size=2, max_size=2), st.lists(st.integers(0, 2), min_size=2, max_size=2))
def test_free_commutative_intersections(a, b):
    F = FreeCommutative(2)
    a, b = tuple(a), tuple(b)
    universe = vectors(2, 5)
    I = intersect_principal(F, a, b)
    got = set()
    for g in I.generators:
        got |= vector_multiples(g, universe)
    assert got == vector_multiples(a, universe) & vector_multiples(b, universe)
