import itertools
import random

from oracles import apply_sequence, generated_right_ideal, is_right_congruence, naive_annihilator, naive_closure, relation_of
from wrcsemi.constructions import monoid_free_product
from wrcsemi.congruences import (
    PairSet,
    XSequence,
    annihilator,
    annihilator_generators,
    check_fre,
    congruence_equal,
    content,
    find_xsequence,
    fre_verdict,
    generate_congruence,
    minimal_generating_pairs,
    universal_congruence_check,
    verify_xsequence,
)
from wrcsemi.core import FreeMonoid, cyclic_group, null_semigroup, parse_table_text
from wrcsemi.randomgen import random_pairs, random_semigroups

SEMILATTICE = "2\n1 z\n1 z\nz z\n"


def test_empty_generating_set_gives_diagonal():
    S = cyclic_group(4)
    cong = generate_congruence(S, PairSet(S))
    assert all(len(c) == 1 for c in cong.classes())


def test_semilattice_pair_gives_universal():
    S = parse_table_text(SEMILATTICE)
    cong = generate_congruence(S, PairSet(S, [(S.parse("1"), S.parse("z"))]))
    assert len(cong.classes()) == 1


def test_closure_matches_naive_oracle():
    rng = random.Random(5)
    for S in random_semigroups(5, 40, 6):
        X = random_pairs(rng, S)
        got = relation_of(S, generate_congruence(S, X))
        assert got == naive_closure(S, X.generators())
        assert is_right_congruence(S, got)


def test_closure_is_idempotent_on_annihilators():
    for S in random_semigroups(6, 20, 6):
        for a in S.elements():
            rho = annihilator(S, a)
            pairs = PairSet(S, rho.pairs())
            assert generate_congruence(S, pairs).labels == rho.labels


def test_annihilator_matches_naive():
    for S in random_semigroups(7, 20, 6):
        for a in S.elements():
            assert relation_of(S, annihilator(S, a)) == naive_annihilator(S, a)


def test_left_cancellative_annihilator_is_diagonal():
    G = cyclic_group(5)
    for a in G.elements():
        assert all(len(c) == 1 for c in annihilator(G, a).classes())


def test_null_element_annihilator_is_universal():
    S = null_semigroup(4)
    assert len(annihilator(S, S.parse("a2")).classes()) == 1


def test_verify_accepts_and_rejects():
    S = parse_table_text(SEMILATTICE)
    one, z = S.parse("1"), S.parse("z")
    X = PairSet(S, [(one, z)])
    assert verify_xsequence(S, X, XSequence(one, z, [(one, z, None)]))
    assert verify_xsequence(S, X, XSequence(z, z, []))
    bad = verify_xsequence(S, PairSet(S), XSequence(one, z, [(one, z, None)]))
    assert not bad and bad.step == 1
    bad = verify_xsequence(S, X, XSequence(one, one, [(one, z, None)]))
    assert not bad and "ends at" in bad.reason


def test_find_xsequence_sound_and_complete():
    rng = random.Random(9)
    for S in random_semigroups(9, 30, 6):
        X = random_pairs(rng, S)
        cong = generate_congruence(S, X)
        depth = S.order ** 2
        for a, b in itertools.product(S.elements(), repeat=2):
            seq = find_xsequence(S, X, a, b, depth=depth)
            if cong.contains(a, b):
                assert seq is not None
                assert verify_xsequence(S, X, seq)
                assert apply_sequence(S, seq) == b
            else:
                assert seq is None


def test_free_product_sequence_example():
    sl = parse_table_text(SEMILATTICE, "sl")
    F = monoid_free_product([sl, sl])
    X = PairSet(F, [(F.identity, F.parse("z@1"))])
    seq = find_xsequence(F, X, F.parse("z@2"), F.parse("z@1*z@2"), depth=3)
    assert seq is not None and len(seq) == 1
    assert seq.steps[0] == (F.identity, F.parse("z@1"), F.parse("z@2"))


def test_free_monoid_sequence_uses_prefixes():
    F = FreeMonoid("ab")
    X = PairSet(F, [("a", "b")])
    seq = find_xsequence(F, X, "aab", "bab", depth=4)
    assert seq is not None and verify_xsequence(F, X, seq)
    assert find_xsequence(F, X, "aab", "abb", depth=4) is None


def test_content_lemma():
    rng = random.Random(3)
    for S in random_semigroups(4, 30, 6):
        X = random_pairs(rng, S)
        lhs = generated_right_ideal(S, content(S, generate_congruence(S, X)))
        rhs = generated_right_ideal(S, content(S, X.generators()))
        assert lhs == rhs
    assert content(None, []) == []


def test_minimal_generating_pairs_generate():
    for S in random_semigroups(8, 30, 6):
        for a in S.elements():
            rho = annihilator(S, a)
            X = minimal_generating_pairs(S, rho)
            assert generate_congruence(S, X).labels == rho.labels
            for drop in X.generators():
                rest = PairSet(S, [p for p in X.generators() if p != drop])
                assert generate_congruence(S, rest).labels != rho.labels


def test_congruence_equal_examples():
    S = cyclic_group(3)
    assert congruence_equal(S, PairSet(S), PairSet(S, [(0, 0)]))


def test_check_fre_finite():
    for S in random_semigroups(2, 10, 5):
        records = check_fre(S)
        assert fre_verdict(records) == "yes"
        for r in records:
            assert generate_congruence(S, r.generators).labels == annihilator(S, r.a).labels


def test_check_fre_free_monoid_is_diagonal():
    records = check_fre(FreeMonoid("ab"), 3)
    assert fre_verdict(records) == "yes"
    assert all(r.generators.size() == 0 for r in records)


def test_annihilator_generators_infinite_cancellative():
    assert annihilator_generators(FreeMonoid("a"), "a").size() == 0


def test_universal_check_examples():
    u = universal_congruence_check(null_semigroup(2))
    assert u.applicable and u.fre == "yes" and u.agree
    assert not universal_congruence_check(cyclic_group(3)).applicable
    triv = universal_congruence_check(null_semigroup(1))
    assert triv.applicable and triv.agree
