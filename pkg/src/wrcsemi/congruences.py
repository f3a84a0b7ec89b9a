"""Right congruences: generation, X-sequence certificates, annihilators, FRE checks."""
from __future__ import annotations

from dataclasses import dataclass, field

from .core import DEFAULT_BOUND, Unsupported
from .ideals import RightIdeal, is_finitely_generated_ideal, minimal_generators

INFINITE_DEPTH = 12
MAX_NODES = 50000


class PairSet:
    """A symmetric set of pairs, kept in insertion order."""

    def __init__(self, S, pairs=()):
        self.S = S
        d = {}
        for p, q in pairs:
            d[(p, q)] = None
            d[(q, p)] = None
        self.pairs = tuple(d)
        self._set = frozenset(d)

    def __contains__(self, pair):
        return pair in self._set

    def __iter__(self):
        return iter(self.pairs)

    def __len__(self):
        return len(self.pairs)

    def __eq__(self, other):
        return isinstance(other, PairSet) and self._set == other._set

    def __hash__(self):
        return hash(self._set)

    def generators(self):
        """One pair per symmetric orbit, diagonal pairs dropped."""
        seen, out = set(), []
        for p, q in self.pairs:
            if p == q or (q, p) in seen:
                continue
            seen.add((p, q))
            out.append((p, q))
        return out

    def size(self):
        return len(self.generators())

    def map(self, fn, target=None):
        return PairSet(target or self.S, [(fn(p), fn(q)) for p, q in self.generators()])

    def union(self, other):
        return PairSet(self.S, list(self.generators()) + list(other.generators()))

    def restrict(self, member):
        return PairSet(self.S, [(p, q) for p, q in self.generators() if member(p) and member(q)])

    def format(self):
        S = self.S
        return "{" + ", ".join("(%s,%s)" % (S.format(p), S.format(q)) for p, q in self.generators()) + "}"


@dataclass
class XSequence:
    """``a = p1 c1, q1 c1 = p2 c2, ..., qn cn = b``; ``c = None`` is 1."""

    source: object
    target: object
    steps: list = field(default_factory=list)

    def __len__(self):
        return len(self.steps)

    def reversed(self):
        return XSequence(self.target, self.source, [(q, p, c) for p, q, c in reversed(self.steps)])

    def then(self, other):
        return XSequence(self.source, other.target, list(self.steps) + list(other.steps))

    def map(self, fn):
        """Apply ``fn`` to every element, keeping ``None`` multipliers as 1."""
        def f1(c):
            return None if c is None else fn(c)
        return XSequence(fn(self.source), fn(self.target), [(fn(p), fn(q), f1(c)) for p, q, c in self.steps])


@dataclass
class Verdict:
    ok: bool
    step: int | None = None
    reason: str = ""

    def __bool__(self):
        return self.ok


def verify_xsequence(S, X, seq):
    """Check every equality of ``seq`` and that each ``(p, q)`` lies in ``X``.

    ``step`` in a failing verdict is 1-based; 0 refers to the endpoints of an
    empty sequence.
    """
    if not seq.steps:
        if seq.source == seq.target:
            return Verdict(True)
        return Verdict(False, 0, "empty sequence between distinct elements")
    prev = seq.source
    for k, (p, q, c) in enumerate(seq.steps, 1):
        if (p, q) not in X:
            return Verdict(False, k, "pair (%s,%s) is not in the generating set" % (S.format(p), S.format(q)))
        if S.right_mul(p, c) != prev:
            return Verdict(False, k, "%s * %s does not equal %s" % (S.format(p), S.format1(c), S.format(prev)))
        prev = S.right_mul(q, c)
    if prev != seq.target:
        return Verdict(False, len(seq.steps), "sequence ends at %s, not %s" % (S.format(prev), S.format(seq.target)))
    return Verdict(True)


class RightCongruence:
    """A right congruence as a class labelling (finite) or a pair predicate."""

    def __init__(self, S, labels=None, member=None, origin="generated"):
        self.S = S
        self.labels = labels
        self._member = member
        self.origin = origin

    @property
    def finite(self):
        return self.labels is not None

    def contains(self, s, t):
        if self.labels is not None:
            idx = self.S.table.index
            return self.labels[idx[s]] == self.labels[idx[t]]
        return self._member(s, t)

    def classes(self, bound=DEFAULT_BOUND):
        S = self.S
        if self.labels is not None:
            elems = S.table.elements
            groups = {}
            for i, lab in enumerate(self.labels):
                groups.setdefault(lab, []).append(elems[i])
            return list(groups.values())
        groups = []
        for x in S.enumerate(bound):
            for g in groups:
                if self._member(g[0], x):
                    g.append(x)
                    break
            else:
                groups.append([x])
        return groups

    def pairs(self, bound=DEFAULT_BOUND):
        """Non-diagonal pairs (both orders) among elements of grade <= bound."""
        return [(s, t) for cls in self.classes(bound) for s in cls for t in cls if s != t]

    def content(self, bound=DEFAULT_BOUND):
        return [x for cls in self.classes(bound) if len(cls) > 1 for x in cls]

    def __eq__(self, other):
        if not isinstance(other, RightCongruence) or self.S is not other.S:
            return NotImplemented
        if self.labels is None or other.labels is None:
            raise Unsupported("exact comparison needs finite congruences")
        return self.labels == other.labels

    def size(self):
        return sum(len(c) ** 2 for c in self.classes())


def _canonical_labels(parent_find, n):
    first = {}
    labels = []
    for i in range(n):
        r = parent_find(i)
        labels.append(first.setdefault(r, i))
    return labels


class _Closure:
    """Incremental union-find closure on a finite table, with provenance.

    Each merge records ``(u, v, p, q, c)`` meaning ``u = p c`` and
    ``v = q c`` for a seed pair ``(p, q)``; ``c = None`` is 1.
    """

    def __init__(self, table):
        self.t = table
        self.parent = list(range(table.n))
        self.provenance = []

    def find(self, i):
        parent = self.parent
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    def add(self, p, q):
        rows = self.t.rows
        n = self.t.n
        merged = False
        work = [(p, q, None)]
        while work:
            u_, v_, c = work.pop()
            u = u_ if c is None else rows[u_][c]
            v = v_ if c is None else rows[v_][c]
            ru, rv = self.find(u), self.find(v)
            if ru == rv:
                continue
            self.parent[ru] = rv
            merged = True
            self.provenance.append((u, v, p, q, c))
            for s in range(n):
                work.append((p, q, s if c is None else rows[c][s]))
        return merged

    def labels(self):
        return _canonical_labels(self.find, self.t.n)


def _closure_of(S, pairs):
    t = S.table
    cl = _Closure(t)
    for p, q in pairs:
        cl.add(t.index[p], t.index[q])
    return cl


def generate_congruence(S, X):
    """The least right congruence on finite ``S`` containing ``X``."""
    if not S.finite:
        raise Unsupported("exact generation needs a finite semigroup")
    pairs = X.generators() if isinstance(X, PairSet) else list(X)
    cl = _closure_of(S, pairs)
    return RightCongruence(S, cl.labels(), origin="generated")


def congruence_equal(S, X, Y):
    return generate_congruence(S, X).labels == generate_congruence(S, Y).labels


def identity_congruence(S):
    if S.finite:
        return RightCongruence(S, list(range(S.table.n)), origin="identity")
    return RightCongruence(S, member=lambda s, t: s == t, origin="identity")


def universal_congruence(S):
    if S.finite:
        return RightCongruence(S, [0] * S.table.n, origin="universal")
    return RightCongruence(S, member=lambda s, t: True, origin="universal")


def annihilator(S, a):
    """``{(s, t) : a s = a t}``."""
    S.check(a)
    if S.finite:
        t = S.table
        row = t.rows[t.index[a]]
        first = {}
        labels = [first.setdefault(row[j], j) for j in range(t.n)]
        return RightCongruence(S, labels, origin=("annihilator", a))
    return RightCongruence(S, member=lambda s, u: S.mul(a, s) == S.mul(a, u), origin=("annihilator", a))


def content(S, X):
    """Elements occurring in a non-diagonal pair of ``X`` (pairs or a congruence)."""
    if isinstance(X, RightCongruence):
        return X.content()
    out = {}
    for p, q in X:
        if p != q:
            out[p] = None
            out[q] = None
    return list(out)


def content_ideal(S, X):
    return RightIdeal(S, tuple(content(S, X)))


def content_ideal_members(S, X, bound=DEFAULT_BOUND):
    gens = content(S, X)
    from .ideals import in_principal

    return [x for x in S.enumerate(bound) if any(in_principal(S, g, x, bound) for g in gens)]


# ---------------------------------------------------------------------------
# certificates


def _finite_adjacency(S, X):
    t = S.table
    idx = t.index
    adj = [[] for _ in range(t.n)]
    for p, q in X:
        pi, qi = idx[p], idx[q]
        adj[pi].append((qi, p, q, None))
        for c in range(t.n):
            adj[t.rows[pi][c]].append((t.rows[qi][c], p, q, t.elements[c]))
    return adj


def find_xsequence(S, X, a, b, depth=None, bound=DEFAULT_BOUND, max_grade=None):
    """A shortest ``X``-sequence from ``a`` to ``b`` within ``depth`` steps.

    Finite ``S`` scans every multiplier; infinite backends use
    ``solve_right`` and only visit elements of grade at most ``max_grade``.
    """
    if not isinstance(X, PairSet):
        X = PairSet(S, X)
    if a == b:
        return XSequence(a, b, [])
    if S.finite:
        t = S.table
        depth = t.n * t.n if depth is None else depth
        adj = _finite_adjacency(S, X)
        start, goal = t.index[a], t.index[b]
        back = {start: None}
        frontier = [start]
        for _ in range(depth):
            nxt = []
            for u in frontier:
                for v, p, q, c in adj[u]:
                    if v not in back:
                        back[v] = (u, p, q, c)
                        if v == goal:
                            return _unwind(back, goal, t.elements, a, b)
                        nxt.append(v)
            if not nxt:
                return None
            frontier = nxt
        return None

    depth = INFINITE_DEPTH if depth is None else depth
    if max_grade is None:
        max_grade = max(S.grade(a), S.grade(b)) + 2
    back = {a: None}
    frontier = [a]
    for _ in range(depth):
        nxt = []
        for u in frontier:
            for p, q in X:
                for c in S.solve_right(p, u, bound):
                    v = S.right_mul(q, c)
                    if v in back or S.grade(v) > max_grade:
                        continue
                    back[v] = (u, p, q, c)
                    if v == b:
                        return _unwind(back, b, None, a, b)
                    nxt.append(v)
            if len(back) > MAX_NODES:
                return None
        if not nxt:
            return None
        frontier = nxt
    return None


def _unwind(back, goal, elements, a, b):
    steps = []
    v = goal
    while back[v] is not None:
        u, p, q, c = back[v]
        steps.append((p, q, c))
        v = u
    steps.reverse()
    return XSequence(a, b, steps)


# ---------------------------------------------------------------------------
# generating sets


def minimal_generating_pairs(S, cong):
    """An irredundant generating set for a finite right congruence.

    Candidate pairs join each class to its first element; a candidate is
    kept only if it merges something new (closure provenance), then pairs
    are dropped greedily in insertion order while the closure is unchanged.
    """
    t = S.table
    cl = _Closure(t)
    kept = []
    for cls in cong.classes():
        head = t.index[cls[0]]
        for x in cls[1:]:
            if cl.add(head, t.index[x]):
                kept.append((cls[0], x))
    target = cong.labels
    i = 0
    while i < len(kept):
        trial = kept[:i] + kept[i + 1:]
        if _closure_of(S, trial).labels() == target:
            kept = trial
        else:
            i += 1
    return PairSet(S, kept)


def annihilator_generators(S, a):
    if not S.finite:
        if S.left_cancellative:
            return PairSet(S)
        raise Unsupported("no exact annihilator generators for %s" % S.description)
    return minimal_generating_pairs(S, annihilator(S, a))


@dataclass
class FreRecord:
    a: object
    generators: PairSet
    exact: bool
    bound: int | None
    evidence: str


def _bounded_generators(S, cong, bound):
    """Pairs needed to generate ``cong`` restricted to elements of grade <= bound."""
    elems = S.enumerate(bound)
    index = {x: i for i, x in enumerate(elems)}
    parent = list(range(len(elems)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    kept = []
    for cls in cong.classes(bound):
        for x in cls[1:]:
            work = [(cls[0], x)]
            merged = False
            while work:
                u, v = work.pop()
                if u not in index or v not in index:
                    continue
                ru, rv = find(index[u]), find(index[v])
                if ru == rv:
                    continue
                parent[ru] = rv
                merged = True
                for s in elems:
                    work.append((S.mul(u, s), S.mul(v, s)))
            if merged and find(index[cls[0]]) == find(index[x]):
                kept.append((cls[0], x))
    return PairSet(S, kept)


def check_fre(S, bound=DEFAULT_BOUND):
    """Per-element generating sets of the right annihilator congruences."""
    out = []
    if S.finite:
        for a in S.elements():
            gens = annihilator_generators(S, a)
            out.append(FreRecord(a, gens, True, None, "irredundant (%d pairs)" % gens.size()))
        return out
    for a in S.enumerate(bound):
        if S.left_cancellative:
            out.append(FreRecord(a, PairSet(S), True, None, "left cancellative: identity relation"))
            continue
        gens = _bounded_generators(S, annihilator(S, a), bound)
        out.append(FreRecord(a, gens, False, bound, "%d pairs within grade %d" % (gens.size(), bound)))
    return out


def fre_verdict(records):
    return "yes" if all(r.exact for r in records) else "bounded"


@dataclass
class UniversalCheck:
    applicable: bool
    reason: str
    fre: str = ""
    universal_generators: PairSet | None = None
    agree: bool = False


def universal_congruence_check(S):
    """FRE versus finite generation of the universal congruence.

    Applies when each element is left cancellative or has ``aS = {a^2}``,
    with at least one of the latter.
    """
    if not S.finite:
        raise Unsupported("decided on finite semigroups only")
    t = S.table
    some_null = False
    for i in range(t.n):
        row = t.rows[i]
        lc = len(set(row)) == t.n
        null = len(set(row)) == 1 and row[0] == row[i]
        if null:
            some_null = True
        elif not lc:
            return UniversalCheck(False, "%s is neither left cancellative nor has aS = {a^2}" % S.format(t.elements[i]))
    if not some_null:
        return UniversalCheck(False, "no element with aS = {a^2}")
    records = check_fre(S)
    fre = "yes" if all(r.exact for r in records) else "no"
    nabla = minimal_generating_pairs(S, universal_congruence(S))
    nabla_ok = generate_congruence(S, nabla).labels == [0] * t.n
    return UniversalCheck(True, "hypothesis holds", fre, nabla, (fre == "yes") == nabla_ok)


def right_ideal_generators_from_congruence(S, cong):
    """Irredundant generators of ``C(cong) S^1`` on finite ``S``."""
    members = set()
    t = S.table
    for x in cong.content():
        i = t.index[x]
        members.add(x)
        members.update(t.elements[t.rows[i][j]] for j in range(t.n))
    order = {x: i for i, x in enumerate(t.elements)}
    return minimal_generators(S, sorted(members, key=order.__getitem__))


__all__ = [
    "PairSet",
    "XSequence",
    "Verdict",
    "RightCongruence",
    "generate_congruence",
    "congruence_equal",
    "annihilator",
    "content",
    "content_ideal",
    "find_xsequence",
    "verify_xsequence",
    "check_fre",
    "universal_congruence_check",
    "is_finitely_generated_ideal",
]
