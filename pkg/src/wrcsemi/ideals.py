"""Principal right ideals, their intersections, and finite generation."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .constructions import DirectProduct
from .core import DEFAULT_BOUND, FreeCommutative, FreeMonoid


@dataclass
class RightIdeal:
    """The right ideal ``X S^1`` generated by ``generators``.

    ``exact`` is False when the generating set was found by a grade-bounded
    search, in which case ``bound`` records the grade.
    """

    S: object
    generators: tuple
    exact: bool = True
    bound: int | None = None

    def contains(self, x, bound=DEFAULT_BOUND):
        return ideal_membership(self, x, bound) == "yes"

    def members(self, bound=DEFAULT_BOUND):
        return [x for x in self.S.enumerate(bound) if self.contains(x, bound)]

    def format(self):
        return "{" + ", ".join(self.S.format(g) for g in self.generators) + "}"


def in_principal(S, g, x, bound=DEFAULT_BOUND):
    """Whether ``x`` lies in ``g S^1``."""
    return x == g or any(c is not None for c in S.solve_right(g, x, bound))


def ideal_membership(ideal, x, bound=DEFAULT_BOUND):
    S = ideal.S
    if any(in_principal(S, g, x, bound) for g in ideal.generators):
        return "yes"
    return "no" if S.exact else "unknown"


def principal(S, a):
    return RightIdeal(S, (a,))


def r_comparable(S, a, b, bound=DEFAULT_BOUND):
    return in_principal(S, a, b, bound) or in_principal(S, b, a, bound)


def minimal_generators(S, elems, bound=DEFAULT_BOUND):
    """Irredundant generators of the right ideal ``elems S^1``.

    ``elems`` must already be closed under right multiplication (e.g. an
    exhaustively computed ideal).  One representative is kept from each
    R-class that is maximal among the classes meeting ``elems``.
    """
    elems = list(dict.fromkeys(elems))
    out = []
    covered = set()
    for z in elems:
        if z in covered:
            continue
        above = [y for y in elems if y != z and in_principal(S, y, z, bound)
                 and not in_principal(S, z, y, bound)]
        if above:
            continue
        out.append(z)
        covered.update(y for y in elems if in_principal(S, z, y, bound) and in_principal(S, y, z, bound))
    return out


def _principal_set(S, a):
    t = S.table
    i = t.index[a]
    return {a} | {t.elements[t.rows[i][j]] for j in range(t.n)}


def intersect_principal(S, a, b, bound=DEFAULT_BOUND):
    """A generating set for ``a S^1 ∩ b S^1``."""
    S.check(a, b)
    if S.finite:
        common = _principal_set(S, a) & _principal_set(S, b)
        order = {x: i for i, x in enumerate(S.elements())}
        common = sorted(common, key=order.__getitem__)
        return RightIdeal(S, tuple(minimal_generators(S, common)))
    if isinstance(S, FreeMonoid):
        if b.startswith(a):
            return RightIdeal(S, (b,))
        if a.startswith(b):
            return RightIdeal(S, (a,))
        return RightIdeal(S, ())
    if isinstance(S, FreeCommutative) and not S.positive:
        return RightIdeal(S, (tuple(max(x, y) for x, y in zip(a, b)),))
    if isinstance(S, DirectProduct) and S.left.identity is not None and S.right.identity is not None:
        left = intersect_principal(S.left, a[0], b[0], bound)
        right = intersect_principal(S.right, a[1], b[1], bound)
        gens = tuple(itertools.product(left.generators, right.generators))
        exact = left.exact and right.exact
        return RightIdeal(S, gens, exact, None if exact else bound)
    return bounded_intersection(S, a, b, bound)


def bounded_intersection(S, a, b, bound=DEFAULT_BOUND):
    top = max(bound, S.grade(a), S.grade(b))
    common = [x for x in S.enumerate(top) if in_principal(S, a, x, top) and in_principal(S, b, x, top)]
    return RightIdeal(S, tuple(minimal_generators(S, common, top)), False, top)


@dataclass
class IdealGeneration:
    """Finite-generation evidence for a right ideal given by a predicate.

    ``status`` is ``"exact"`` on finite semigroups.  Otherwise it is
    ``"saturated"`` when no irreducible element sits at the top grade (a
    finite generating set has likely been found) or ``"growing"`` when the
    irreducible count is still increasing at the bound.
    """

    status: str
    generators: list
    count: int
    bound: int | None
    counts_by_grade: dict = field(default_factory=dict)


def is_finitely_generated_ideal(S, member, bound=DEFAULT_BOUND):
    if S.finite:
        elems = [x for x in S.elements() if member(x)]
        gens = minimal_generators(S, elems)
        return IdealGeneration("exact", gens, len(gens), None)
    elems = [x for x in S.enumerate(bound) if member(x)]
    gens = minimal_generators(S, elems, bound)
    by_grade = {}
    for g in gens:
        by_grade[S.grade(g)] = by_grade.get(S.grade(g), 0) + 1
    top = max((S.grade(x) for x in elems), default=0)
    status = "growing" if by_grade.get(top) else "saturated"
    return IdealGeneration(status, gens, len(gens), bound, by_grade)


def right_ideal_generators(S, bound=DEFAULT_BOUND):
    """A minimal ``U`` with ``S = U S^1`` (exact on finite ``S``).

    Returns ``(U, evidence)``; on infinite semigroups ``U`` is ``None``
    when irreducible elements keep appearing at the top grade.
    """
    if S.identity is not None:
        return [S.identity], IdealGeneration("exact", [S.identity], 1, None)
    ev = is_finitely_generated_ideal(S, lambda x: True, bound)
    if ev.status == "growing":
        return None, ev
    return ev.generators, ev


@dataclass
class RihRecord:
    a: object
    b: object
    generators: tuple
    exact: bool
    bound: int | None


def check_rih(S, bound=DEFAULT_BOUND, pair_bound=None):
    """Generating sets for every R-incomparable pair of principal right ideals.

    On infinite backends pairs range over elements of grade at most
    ``pair_bound`` (default ``bound``).
    """
    elems = S.elements() if S.finite else S.enumerate(pair_bound if pair_bound is not None else bound)
    out = []
    for a, b in itertools.combinations(elems, 2):
        if r_comparable(S, a, b, bound):
            continue
        ideal = intersect_principal(S, a, b, bound)
        out.append(RihRecord(a, b, ideal.generators, ideal.exact, ideal.bound))
    return out


def rih_verdict(records):
    """``"yes"`` when every record is exact, else ``"bounded"``."""
    return "yes" if all(r.exact for r in records) else "bounded"
