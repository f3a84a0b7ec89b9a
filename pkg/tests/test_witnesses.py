import itertools

import pytest

from oracles import naive_annihilator, naive_closure
from wrcsemi.congruences import PairSet, annihilator_generators, verify_xsequence
from wrcsemi.constructions import (
    DirectProduct,
    ReesQuotient,
    generated_ideal,
    homomorphism,
    retraction,
    semigroup_free_product,
    subsemigroup,
)
from wrcsemi.core import (
    ZERO,
    FreeMonoid,
    TableSemigroup,
    Unsupported,
    cyclic_group,
    left_zero_semigroup,
    null_semigroup,
    parse_table_text,
)
from wrcsemi.gallery import InfiniteLeftZero
from wrcsemi.ideals import right_ideal_generators
from wrcsemi.randomgen import random_semigroups
from wrcsemi.witnesses import (
    adjoin_zero_witness,
    ideal_complement_witness,
    image_witness,
    product_witness,
    regular_certificate,
    regular_partner,
    regular_witness,
    rih_image_witness,
    rih_product_witness,
    sfp_witness,
    small_extension_witness,
)

SEMILATTICE = "2\n1 z\n1 z\nz z\n"


def generates(S, X, a):
    return naive_closure(S, X.generators()) == naive_annihilator(S, a)


def test_regular_witness_left_zero():
    S = left_zero_semigroup(3)
    U, _ = right_ideal_generators(S)
    for a in S.elements():
        r = regular_witness(S, a, a, U)
        assert r.verdict == "oracle-exact"
        assert generates(S, r.generators, a)


def test_regular_witness_random_monoids():
    for S in random_semigroups(21, 30, 6, monoid=True):
        for a in S.elements():
            b = regular_partner(S, a)
            if b is None:
                continue
            r = regular_witness(S, a, b, [S.identity])
            assert r.verdict == "oracle-exact"
            assert r.generators.size() <= 1
            assert all(len(c) <= 2 for c in r.certificates)


def test_regular_certificate_shape():
    S = parse_table_text(SEMILATTICE)
    one, z = S.parse("1"), S.parse("z")
    seq = regular_certificate(S, z, z, [one], one, z)
    assert verify_xsequence(S, PairSet(S, [(z, one)]), seq)


def test_regular_witness_rejects_non_regular():
    S = null_semigroup(2)
    a = S.parse("a1")
    assert regular_witness(S, a, a, [a]).verdict == "inapplicable"


def test_image_identity_keeps_generators():
    S = cyclic_group(4)
    phi = homomorphism(S, S, lambda x: x)
    for a in S.elements():
        X = annihilator_generators(S, a)
        r = image_witness(phi, a, X)
        assert r.generators == X and r.verdict == "oracle-exact"


def test_image_under_retraction():
    sl = parse_table_text(SEMILATTICE)
    S = DirectProduct(sl, sl)
    one = sl.identity
    T = subsemigroup(S, lambda x: x[1] == one)
    phi = retraction(S, T, lambda x: (x[0], one))
    for b in T.elements():
        r = image_witness(phi, b)
        assert r.verdict == "oracle-exact"


def test_image_under_rees_maps():
    exact = 0
    for S in random_semigroups(31, 25, 6):
        for g in S.elements():
            member = generated_ideal(S, [g])
            Q = ReesQuotient(S, member)
            phi = homomorphism(S, Q, lambda x, m=member: ZERO if m(x) else x)
            for a in S.elements():
                r = image_witness(phi, a)
                assert r.verdict in ("oracle-exact", "inapplicable")
                exact += r.verdict == "oracle-exact"
    assert exact > 0


def test_ideal_complement_full_subsemigroup():
    S = cyclic_group(3)
    T = subsemigroup(S, lambda x: True)
    for a in S.elements():
        X = annihilator_generators(S, a)
        r = ideal_complement_witness(S, T, a, X)
        assert r.generators.generators() == X.generators()
        assert r.verdict == "oracle-exact"


def test_ideal_complement_random():
    count = 0
    for S in random_semigroups(41, 40, 6):
        for g in S.elements():
            member = generated_ideal(S, [g])
            inside = [x for x in S.elements() if not member(x)]
            if not inside:
                continue
            try:
                T = subsemigroup(S, lambda x, m=member: not m(x))
            except Exception:
                continue
            for a in inside:
                r = ideal_complement_witness(S, T, a)
                assert r.verdict == "oracle-exact", r.notes
                count += 1
    assert count > 20


def test_small_extension_trivial():
    S = cyclic_group(3)
    T = subsemigroup(S, lambda x: True)
    for a in S.elements():
        X = PairSet(T, annihilator_generators(S, a).generators())
        r = small_extension_witness(S, T, a, X)
        assert r.generators == PairSet(S, X.generators())


def test_small_extension_random():
    count = 0
    for S in random_semigroups(51, 40, 7):
        elems = list(S.elements())
        for drop in elems:
            member = lambda x, d=drop: x != d
            if any(not member(S.mul(x, y)) for x in elems if member(x) for y in elems if member(y)):
                continue
            if len(elems) < 2:
                continue
            T = subsemigroup(S, member)
            for a in T.elements():
                r = small_extension_witness(S, T, a)
                assert r.verdict == "oracle-exact", r.notes
                count += 1
    assert count > 20


def test_adjoin_zero_monoid():
    for S in random_semigroups(61, 15, 6, monoid=True):
        r = adjoin_zero_witness(S, [S.identity])
        assert r.verdict == "oracle-exact"
        assert r.generators.generators() == [(ZERO, S.identity)]
        assert all(p.verdict == "oracle-exact" for p in r.parts)


def test_adjoin_zero_left_zero():
    S = left_zero_semigroup(3)
    r = adjoin_zero_witness(S)
    assert r.ok
    assert set(r.generators.generators()) == {(ZERO, x) for x in S.elements()}


def test_product_of_groups_uses_mixed_pairs_only():
    for m, n in [(2, 3), (3, 3), (1, 4)]:
        S, T = cyclic_group(m), cyclic_group(n)
        r = product_witness(S, T, 0, 0)
        assert r.verdict == "oracle-exact"
        assert r.generators.size() == 0


def test_product_random_pairs():
    Ss = random_semigroups(71, 12, 4, monoid=True)
    Ts = random_semigroups(72, 12, 4, monoid=True)
    for S, T in zip(Ss, Ts):
        for a, b in itertools.product(S.elements(), T.elements()):
            r = product_witness(S, T, a, b)
            assert r.verdict == "oracle-exact", r.notes
            P = DirectProduct(S, T)
            assert generates(P, r.generators, (a, b))


def test_product_needs_pairwise_right_identities():
    r = product_witness(null_semigroup(2), cyclic_group(2), 0, 0)
    assert r.verdict == "inapplicable"


def test_sfp_case_one_free_semigroups():
    F = semigroup_free_product([FreeMonoid("ab", monoid=False), FreeMonoid("c", monoid=False)])
    r = sfp_witness(F, F.parse("a@1*c@2"), bound=3)
    assert r.verdict == "bounded" and "case (1)" in r.notes
    assert r.generators.size() == 0


def test_sfp_case_two_finite_factors():
    F = semigroup_free_product([cyclic_group(2), left_zero_semigroup(2)])
    for a in F.enumerate(2):
        r = sfp_witness(F, a, bound=3)
        assert r.verdict == "bounded", r.notes
        assert "case (2)" in r.notes


def test_sfp_bounded_closure_grade_four():
    F = semigroup_free_product([parse_table_text(SEMILATTICE), left_zero_semigroup(2)])
    a = F.parse("z@1")
    r = sfp_witness(F, a, bound=4)
    assert r.verdict == "bounded"
    assert all(F.mul(a, p) == F.mul(a, q) for p, q in r.generators)


def test_sfp_counterexample_inapplicable():
    E = TableSemigroup(["e"], [[0]])
    F = semigroup_free_product([E, InfiniteLeftZero()])
    r = sfp_witness(F, ((0, 0),), bound=2)
    assert r.verdict == "inapplicable"


def test_rih_image_random():
    exact = 0
    for S in random_semigroups(81, 15, 6):
        for g in S.elements():
            member = generated_ideal(S, [g])
            Q = ReesQuotient(S, member)
            phi = homomorphism(S, Q, lambda x, m=member: ZERO if m(x) else x)
            for a, b in itertools.combinations(S.elements(), 2):
                w = rih_image_witness(phi, a, b)
                assert w.verdict in ("oracle-exact", "inapplicable")
                exact += w.ok
    assert exact > 0


def test_rih_product_random():
    for S, T in zip(random_semigroups(91, 10, 4, monoid=True), random_semigroups(92, 10, 4, monoid=True)):
        for x, y in itertools.combinations(list(DirectProduct(S, T).elements()), 2):
            assert rih_product_witness(S, T, x, y).verdict == "oracle-exact"


def test_rih_product_flags_null_factors():
    N = null_semigroup(2)
    w = rih_product_witness(N, N, (1, 1), (0, 1))
    assert w.verdict == "inapplicable"


def test_infinite_witnesses_unsupported():
    F = FreeMonoid("a")
    with pytest.raises(Unsupported):
        product_witness(F, F, "a", "a")
