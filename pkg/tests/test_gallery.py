import pytest

from wrcsemi.core import check_associative
from wrcsemi.gallery import (
    BUILDERS,
    BarredFreeCommutative,
    BarredIdeal,
    InfiniteLeftZero,
    WordIdealExtension,
    build_fixture,
    run_gallery,
)


@pytest.mark.parametrize("name", list(BUILDERS))
def test_fixture_claims_pass(name):
    for n in (1, 2):
        fx = build_fixture(name, n)
        for res in fx.run():
            assert res.passed, (name, n, res.claim, res.evidence)


def test_build_fixture_rejects_bad_input():
    with pytest.raises(KeyError):
        build_fixture("nope", 1)
    with pytest.raises(ValueError):
        build_fixture("rih-ideal", 0)


@pytest.mark.parametrize("level", ["T", "S", "M"])
def test_barred_semigroups_associative(level):
    check_associative(BarredFreeCommutative(2, level), 3)


@pytest.mark.parametrize("level", ["T", "S"])
def test_barred_ideal_associative(level):
    check_associative(BarredIdeal(2, level), 3)


def test_word_ideal_extension_associative():
    check_associative(WordIdealExtension(1), 2)


def test_barred_multiplication_rules():
    S = BarredFreeCommutative(2, "S")
    u, v = ("f", (1, 0)), ("f", (0, 1))
    assert S.mul(u, ("bar", (0, 1))) == ("bar", (1, 1))
    assert S.mul(("bar", (1, 0)), ("bar", (0, 1))) == "0"
    assert S.mul("a", u) == S.mul(u, "b") == ("bar", (1, 0))
    for x in ("a", "b"):
        for y in ("a", "b", "0", ("bar", (1, 0))):
            assert S.mul(x, y) == "0"
    M = BarredFreeCommutative(2, "M")
    assert M.mul("g", "a") == "b" and M.mul("g", "g") == "1"
    assert M.mul("g", v) == v


def test_barred_solve_right_matches_scan():
    S = BarredFreeCommutative(2, "M")
    elems = S.enumerate(3)
    for p in elems:
        for u in elems:
            fast = {c for c in S.solve_right(p, u) if c is not None}
            slow = {c for c in elems if S.mul(p, c) == u}
            assert slow <= fast
            assert all(S.mul(p, c) == u for c in fast)


def test_barred_ideal_rules():
    S = BarredIdeal(2, "S")
    one = S.identity
    assert S.mul("e", "a") == S.mul("a", "e") == "a"
    assert S.mul("e", ("f", (1, 0))) == "0"
    assert S.mul("a", one) == "a"
    assert S.mul("a", ("f", (0, 1))) == "0"


def test_infinite_left_zero():
    L = InfiniteLeftZero()
    assert L.mul(3, 7) == 3 and L.grade(5) == 5 and not L.finite


def test_run_gallery_growth_is_strict():
    report = run_gallery(["fre-adjoined-identity", "fre-rees-quotient"], (1, 2, 3))
    assert report.ok
    sizes = {claim: ms for name, claim, ms, ok in report.growth}
    assert sizes["U-growth"] == [1, 2, 3]


def test_run_gallery_rejects_unknown():
    with pytest.raises(KeyError):
        run_gallery(["nope"])
