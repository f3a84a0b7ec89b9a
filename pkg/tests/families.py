"""Fixed small monoids used by the free product suites."""
from wrcsemi.constructions import AdjoinIdentity
from wrcsemi.core import cyclic_group, left_zero_semigroup, null_semigroup, parse_table_text

SEMILATTICES = {
    "sl2": "2\n1 z\n1 z\nz z\n",
    "chain3": "3\n1 e z\n1 e z\ne e z\nz z z\n",
    "diamond4": "4\n1 e f 0\n1 e f 0\ne e 0 0\nf 0 f 0\n0 0 0 0\n",
}


def monoid_family():
    """Semilattices, cyclic groups and flat extensions, all of order <= 4."""
    out = [parse_table_text(t, name) for name, t in SEMILATTICES.items()]
    out += [cyclic_group(n) for n in (2, 3, 4)]
    for base in (null_semigroup(2), null_semigroup(3), left_zero_semigroup(2), left_zero_semigroup(3)):
        out.append(AdjoinIdentity(base))
    assert all(M.identity is not None and M.order <= 4 for M in out)
    return out
