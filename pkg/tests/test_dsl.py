import pytest
from hypothesis import given, strategies as st

from wrcsemi.constructions import DirectProduct, MonoidFreeProduct, SemigroupFreeProduct
from wrcsemi.core import ZERO
from wrcsemi.dsl import DslError, format_expression, has_identity, load, parse_expression


def round_trip(text):
    node = parse_expression(text)
    again = parse_expression(format_expression(node))
    assert again == node
    return node


def test_examples_parse():
    node = round_trip('adjoin1(sfp(free_sgp("ab"), null(3)))')
    assert node.op == "adjoin1" and node.args[0].op == "sfp"
    node = round_trip('product(table("m.tbl"), free_comm(2))')
    assert node.args[1].args == (2,)


def test_mfp_needs_identities():
    with pytest.raises(DslError, match="lacks an identity") as info:
        parse_expression('mfp(free_sgp("a"))')
    assert (info.value.line, info.value.col) == (1, 5)


@pytest.mark.parametrize(
    "text, line, col",
    [
        ("null(0)", 1, 1),
        ("product(null(2))", 1, 16),
        ("sfp(null(2),\n  foo(1))", 2, 3),
        ('free_monoid("ab"', 1, 17),
        ("null(2) null(3)", 1, 9),
        ("null(2", 1, 7),
        ("null(#)", 1, 6),
        ('rees(null(3), 7)', 1, 15),
    ],
)
def test_errors_carry_positions(text, line, col):
    with pytest.raises(DslError) as info:
        parse_expression(text)
    assert (info.value.line, info.value.col) == (line, col)


def test_build_objects(tmp_path):
    (tmp_path / "sl.tbl").write_text("2\n1 z\n1 z\nz z\n")
    assert isinstance(load('product(null(2), left_zero(2))'), DirectProduct)
    assert isinstance(load('sfp(null(2), left_zero(2))'), SemigroupFreeProduct)
    F = load('mfp(table("sl.tbl"), table("sl.tbl"))', str(tmp_path))
    assert isinstance(F, MonoidFreeProduct)
    assert F.format(F.mul(F.parse("z@1*z@2"), F.parse("z@2"))) == "z@1*z@2"


def test_rees_specs():
    Q = load('rees(free_monoid("ab"), gen("aa"))')
    assert Q.mul(Q.parse("ab"), Q.parse("ab")) == "abab"
    assert Q.mul(Q.parse("ba"), Q.parse("ab")) == ZERO
    assert load('rees(null(3), ["0"])').order == 3
    with pytest.raises(DslError, match="not an ideal"):
        load('rees(left_zero(2), ["l1"])')
    with pytest.raises(DslError, match="finite"):
        load('rees(free_monoid("a"), ["aa"])')


def test_missing_table_is_reported():
    with pytest.raises(DslError):
        load('table("definitely-missing.tbl")')


def test_has_identity():
    assert has_identity(parse_expression("adjoin0(free_comm(2))")) == "yes"
    assert has_identity(parse_expression("product(null(1), left_zero(2))")) == "no"
    assert has_identity(parse_expression('table("x")')) == "unknown"


atoms = st.one_of(
    st.builds(lambda s: 'free_monoid(%s)' % s, st.sampled_from(['"a"', '"ab"', '""'])),
    st.builds(lambda n: "free_comm(%d)" % n, st.integers(1, 3)),
    st.builds(lambda n: "null(%d)" % n, st.integers(1, 4)),
    st.builds(lambda n: "left_zero(%d)" % n, st.integers(1, 4)),
    st.just('free_sgp("xy")'),
    st.just('table("a \\"b\\".tbl")'),
)


def extend(children):
    return st.one_of(
        st.builds(lambda e: "adjoin1(%s)" % e, children),
        st.builds(lambda e: "adjoin0(%s)" % e, children),
        st.builds(lambda a, b: "product(%s,%s)" % (a, b), children, children),
        st.builds(lambda xs: "sfp(%s)" % ", ".join(xs), st.lists(children, min_size=1, max_size=3)),
        st.builds(lambda e: 'rees(%s, gen("1"))' % e, children),
        st.builds(lambda e: "rees(%s, [])" % e, children),
    )


@given(st.recursive(atoms, extend, max_leaves=6))
def test_print_parse_round_trip(text):
    round_trip(text)
