"""Semigroup handles and the element-level operations every other module uses.

Elements are plain hashable Python values owned by a handle:

* table semigroups use ``int`` indices,
* free monoids/semigroups use ``str`` words,
* free commutative backends use exponent ``tuple``s,
* constructions wrap these (see :mod:`wrcsemi.constructions`).

Throughout, ``None`` in a multiplier position stands for the adjoined
identity of ``S^1``.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import cached_property

DEFAULT_BOUND = 6


class AlgebraError(ValueError):
    pass


class NotAssociative(AlgebraError):
    def __init__(self, triple, names=None):
        self.triple = triple
        shown = names or triple
        super().__init__("product is not associative at (%s, %s, %s)" % tuple(shown))


class Unsupported(AlgebraError):
    pass


@dataclass(frozen=True)
class Adjoined:
    """A freshly adjoined identity (``"1"``) or zero (``"0"``)."""

    kind: str

    def __repr__(self):
        return self.kind


ONE = Adjoined("1")
ZERO = Adjoined("0")


class FiniteTable:
    """Integer-indexed Cayley table view of a finite semigroup."""

    def __init__(self, elements, rows):
        self.elements = list(elements)
        self.index = {x: i for i, x in enumerate(self.elements)}
        self.rows = rows
        self.n = len(self.elements)

    def mul(self, i, j):
        return self.rows[i][j]


class Semigroup:
    order: int | None = None
    left_cancellative = False
    # solve_right enumerates every solution, not just those up to a grade
    exact_divisors = False
    description = "?"

    identity = None
    zero = None

    @property
    def finite(self):
        return self.order is not None

    @property
    def exact(self):
        return self.finite or self.exact_divisors

    @property
    def is_monoid(self):
        return self.identity is not None

    def mul(self, x, y):
        raise NotImplementedError

    def canonical(self, x):
        return x

    def contains(self, x):
        raise NotImplementedError

    def grade(self, x):
        return 0

    def elements(self):
        if not self.finite:
            raise Unsupported("%s is infinite" % self.description)
        return self.enumerate(0)

    def enumerate(self, bound):
        raise NotImplementedError

    def format(self, x):
        return str(x)

    def parse(self, text):
        raise NotImplementedError

    def __repr__(self):
        return "<%s %s>" % (type(self).__name__, self.description)

    # -- derived operations -------------------------------------------------

    def check(self, *xs):
        for x in xs:
            if not self.contains(x):
                raise AlgebraError("%r is not an element of %s" % (x, self.description))

    def product(self, x, y):
        self.check(x, y)
        return self.mul(x, y)

    def right_mul(self, x, c):
        return x if c is None else self.mul(x, c)

    def left_mul(self, c, x):
        return x if c is None else self.mul(c, x)

    def with_one(self, bound=DEFAULT_BOUND):
        """Elements of ``S^1`` of grade at most ``bound`` (``None`` first)."""
        return [None] + list(self.enumerate(bound))

    def format1(self, c):
        return "1" if c is None else self.format(c)

    def parse1(self, text):
        text = text.strip()
        if text == "1":
            try:
                c = self.parse(text)
            except (AlgebraError, KeyError, ValueError):
                return None
            # the identity and "no multiplier" act the same way
            return None if c == self.identity else c
        return self.parse(text)

    def solve_right(self, p, u, bound=DEFAULT_BOUND):
        """All ``c`` in ``S^1`` with ``p c = u``.

        ``None`` is included exactly when ``p == u``.  Infinite backends
        without a closed form fall back to a grade-bounded scan.
        """
        sols = [None] if p == u else []
        sols.extend(c for c in self.enumerate(bound) if self.mul(p, c) == u)
        return sols

    def divides_two_sided(self, g, x, bound=DEFAULT_BOUND):
        """Whether ``x`` lies in the two-sided ideal ``S^1 g S^1``."""
        if x == g:
            return True
        ones = self.with_one(bound)
        return any(self.right_mul(self.left_mul(l, g), r) == x for l in ones for r in ones)

    @cached_property
    def table(self) -> FiniteTable:
        elems = list(self.elements())
        index = {x: i for i, x in enumerate(elems)}
        rows = [[index[self.mul(x, y)] for y in elems] for x in elems]
        return FiniteTable(elems, rows)

    def find_identity(self):
        t = self.table
        for e in range(t.n):
            if all(t.rows[e][x] == x and t.rows[x][e] == x for x in range(t.n)):
                return t.elements[e]
        return None

    def find_zero(self):
        t = self.table
        for z in range(t.n):
            if all(t.rows[z][x] == z and t.rows[x][z] == z for x in range(t.n)):
                return t.elements[z]
        return None


def check_associative(S, bound=4):
    """Raise :class:`NotAssociative` on the first failing triple.

    Exhaustive on finite handles, grade-bounded otherwise.
    """
    elems = list(S.enumerate(bound))
    if S.finite:
        t = S.table
        r = t.rows
        rng = range(t.n)
        for x in rng:
            rx = r[x]
            for y in rng:
                xy = rx[y]
                ry = r[y]
                for z in rng:
                    if r[xy][z] != rx[ry[z]]:
                        trip = (t.elements[x], t.elements[y], t.elements[z])
                        raise NotAssociative(trip, [S.format(e) for e in trip])
        return
    for x in elems:
        for y in elems:
            xy = S.mul(x, y)
            for z in elems:
                if S.mul(xy, z) != S.mul(x, S.mul(y, z)):
                    raise NotAssociative((x, y, z), [S.format(e) for e in (x, y, z)])


# ---------------------------------------------------------------------------
# Cayley tables


class TableSemigroup(Semigroup):
    def __init__(self, names, rows, description=None, validate=True):
        names = [str(n) for n in names]
        if len(set(names)) != len(names):
            raise AlgebraError("duplicate element names")
        n = len(names)
        if n == 0:
            raise AlgebraError("empty semigroup")
        if len(rows) != n or any(len(r) != n for r in rows):
            raise AlgebraError("table must be %d x %d" % (n, n))
        for r in rows:
            for v in r:
                if not 0 <= v < n:
                    raise AlgebraError("table entry %r out of range" % v)
        self.names = names
        self.rows = [list(r) for r in rows]
        self.order = n
        self.name_index = {nm: i for i, nm in enumerate(names)}
        self.description = description or "table(%d)" % n
        if validate:
            check_associative(self)
        self.identity = self.find_identity()
        self.zero = self.find_zero()

    def mul(self, x, y):
        return self.rows[x][y]

    def contains(self, x):
        return isinstance(x, int) and not isinstance(x, bool) and 0 <= x < self.order

    def enumerate(self, bound):
        return list(range(self.order))

    def format(self, x):
        return self.names[x]

    def parse(self, text):
        text = text.strip()
        if text not in self.name_index:
            raise AlgebraError("unknown element %r" % text)
        return self.name_index[text]

    def solve_right(self, p, u, bound=DEFAULT_BOUND):
        row = self.rows[p]
        sols = [None] if p == u else []
        sols.extend(c for c in range(self.order) if row[c] == u)
        return sols

    @cached_property
    def table(self):
        return FiniteTable(range(self.order), self.rows)


def table_from_function(elements, fn, names, description=None):
    idx = {x: i for i, x in enumerate(elements)}
    rows = [[idx[fn(x, y)] for y in elements] for x in elements]
    return TableSemigroup(names, rows, description)


def null_semigroup(n):
    """``{0, a1, ..., a(n-1)}`` with every product equal to ``0``."""
    if n < 1:
        raise AlgebraError("order must be positive")
    names = ["0"] + ["a%d" % i for i in range(1, n)]
    return TableSemigroup(names, [[0] * n for _ in range(n)], "null(%d)" % n)


def left_zero_semigroup(n):
    if n < 1:
        raise AlgebraError("order must be positive")
    names = ["l%d" % i for i in range(1, n + 1)]
    return TableSemigroup(names, [[i] * n for i in range(n)], "left_zero(%d)" % n)


def cyclic_group(n):
    names = ["1"] + ["g%d" % i for i in range(1, n)]
    rows = [[(i + j) % n for j in range(n)] for i in range(n)]
    return TableSemigroup(names, rows, "cyclic(%d)" % n)


def transformation_semigroup(generators, degree, with_identity=False, limit=None):
    """Close a set of maps on ``range(degree)`` under composition.

    Maps act on the right: ``(f g)(x) = g(f(x))``.  Returns ``None`` when
    the closure exceeds ``limit`` elements.
    """
    gens = [tuple(g) for g in generators]
    found = list(dict.fromkeys(gens))
    if with_identity:
        ident = tuple(range(degree))
        if ident not in found:
            found.insert(0, ident)
    seen = set(found)
    frontier = list(found)
    while frontier:
        nxt = []
        for f in frontier:
            for g in gens:
                h = tuple(g[f[x]] for x in range(degree))
                if h not in seen:
                    seen.add(h)
                    found.append(h)
                    nxt.append(h)
                    if limit is not None and len(found) > limit:
                        return None
        frontier = nxt
    idx = {f: i for i, f in enumerate(found)}
    rows = [[idx[tuple(g[f[x]] for x in range(degree))] for g in found] for f in found]
    names = ["s%d" % i for i in range(len(found))]
    return TableSemigroup(names, rows, "transformations(%d)" % len(found), validate=False)


# Cayley table text format: n, then names, then n rows of names.


def parse_table_text(text, description=None):
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise AlgebraError("empty table file")
    try:
        n = int(lines[0])
    except ValueError:
        raise AlgebraError("first line must be the order, got %r" % lines[0]) from None
    if len(lines) != n + 2:
        raise AlgebraError("expected %d lines after the order, got %d" % (n + 1, len(lines) - 1))
    names = lines[1].split()
    if len(names) != n:
        raise AlgebraError("expected %d element names" % n)
    index = {nm: i for i, nm in enumerate(names)}
    rows = []
    for k, ln in enumerate(lines[2:]):
        cells = ln.split()
        if len(cells) != n:
            raise AlgebraError("row %d has %d entries, expected %d" % (k + 1, len(cells), n))
        try:
            rows.append([index[c] for c in cells])
        except KeyError as e:
            raise AlgebraError("row %d: unknown element %s" % (k + 1, e)) from None
    return TableSemigroup(names, rows, description)


def read_table(path):
    with open(path) as fh:
        return parse_table_text(fh.read(), 'table("%s")' % path)


def format_table(S):
    t = S.table
    names = [S.format(x) for x in t.elements]
    out = [str(t.n), " ".join(names)]
    for i in range(t.n):
        out.append(" ".join(names[j] for j in t.rows[i]))
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# Free backends


class FreeMonoid(Semigroup):
    """Words over single-character letters; ``monoid=False`` drops the empty word."""

    left_cancellative = True
    exact_divisors = True

    def __init__(self, alphabet, monoid=True):
        letters = list(dict.fromkeys(alphabet))
        if not letters:
            raise AlgebraError("empty alphabet")
        for a in letters:
            if not re.fullmatch(r"[A-Za-z]", a):
                raise AlgebraError("letters must be single ASCII letters, got %r" % a)
        self.alphabet = "".join(letters)
        self.monoid = monoid
        self.identity = "" if monoid else None
        kind = "free_monoid" if monoid else "free_sgp"
        self.description = '%s("%s")' % (kind, self.alphabet)

    def mul(self, x, y):
        return x + y

    def contains(self, x):
        return isinstance(x, str) and (x != "" or self.monoid) and all(c in self.alphabet for c in x)

    def grade(self, x):
        return len(x)

    def enumerate(self, bound):
        out = [""] if self.monoid else []
        for k in range(1, bound + 1):
            out.extend("".join(w) for w in itertools.product(self.alphabet, repeat=k))
        return out

    def format(self, x):
        return x if x else "1"

    def parse(self, text):
        text = text.strip().strip('"')
        w = "" if text == "1" else text
        if not self.contains(w):
            raise AlgebraError("%r is not a word of %s" % (text, self.description))
        return w

    def solve_right(self, p, u, bound=DEFAULT_BOUND):
        sols = [None] if p == u else []
        if u.startswith(p):
            c = u[len(p):]
            if c or self.monoid:
                sols.append(c)
        return sols

    def divides_two_sided(self, g, x, bound=DEFAULT_BOUND):
        return g in x


def _vectors(rank, total):
    if rank == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _vectors(rank - 1, total - first):
            yield (first,) + rest


class FreeCommutative(Semigroup):
    """Exponent vectors under addition.

    ``monoid`` keeps the zero vector; ``positive`` restricts to vectors with
    every coordinate at least one (e.g. the additive semigroup N x N).
    """

    left_cancellative = True
    exact_divisors = True

    def __init__(self, rank, monoid=True, positive=False):
        if rank < 1:
            raise AlgebraError("rank must be positive")
        if positive and monoid:
            raise AlgebraError("positive vectors do not form a monoid")
        self.rank = rank
        self.monoid = monoid
        self.positive = positive
        self.identity = (0,) * rank if monoid else None
        if positive:
            self.description = "positive_vectors(%d)" % rank
        elif monoid:
            self.description = "free_comm(%d)" % rank
        else:
            self.description = "free_comm_sgp(%d)" % rank

    def mul(self, x, y):
        return tuple(a + b for a, b in zip(x, y))

    def contains(self, x):
        if not (isinstance(x, tuple) and len(x) == self.rank):
            return False
        if not all(isinstance(a, int) and a >= 0 for a in x):
            return False
        if self.positive:
            return all(a >= 1 for a in x)
        return self.monoid or any(x)

    def grade(self, x):
        return sum(x)

    def enumerate(self, bound):
        out = []
        for total in range(bound + 1):
            out.extend(v for v in _vectors(self.rank, total) if self.contains(v))
        return out

    def format(self, x):
        return "[" + ",".join(map(str, x)) + "]"

    def parse(self, text):
        text = text.strip()
        m = re.fullmatch(r"\[\s*(\d+(\s*,\s*\d+)*)\s*\]", text)
        if m is None:
            if text == "1" and self.monoid:
                return self.identity
            raise AlgebraError("expected an exponent vector like [1,0], got %r" % text)
        v = tuple(int(a) for a in m.group(1).split(","))
        if not self.contains(v):
            raise AlgebraError("%r is not an element of %s" % (text, self.description))
        return v

    def solve_right(self, p, u, bound=DEFAULT_BOUND):
        sols = [None] if p == u else []
        c = tuple(b - a for a, b in zip(p, u))
        if all(a >= 0 for a in c) and self.contains(c):
            sols.append(c)
        return sols

    def divides_two_sided(self, g, x, bound=DEFAULT_BOUND):
        return all(a <= b for a, b in zip(g, x))


# ---------------------------------------------------------------------------
# element-level queries


@dataclass
class ElementClass:
    left_cancellative: str
    singleton_right_ideal: str
    right_factorisable: str
    regular_partner: object = None


def _yn(flag):
    return "yes" if flag else "no"


def classify_element(S, a, bound=DEFAULT_BOUND):
    """Left cancellativity, ``aS = {a^2}``, ``a in aS`` and a regular partner."""
    S.check(a)
    if S.finite:
        elems = S.elements()
        prods = [S.mul(a, s) for s in elems]
        lc = len(set(prods)) == len(prods)
        aa = S.mul(a, a)
        single = all(p == aa for p in prods)
        rf = a in prods
        partner = next((b for b in elems if S.mul(S.mul(a, b), a) == a), None)
        return ElementClass(_yn(lc), _yn(single), _yn(rf), partner)

    elems = S.enumerate(max(bound, S.grade(a)))
    aa = S.mul(a, a)
    seen = {}
    lc = "yes" if S.left_cancellative else "unknown"
    single = "unknown"
    for s in elems:
        p = S.mul(a, s)
        if p in seen and seen[p] != s:
            lc = "no"
        seen.setdefault(p, s)
        if p != aa:
            single = "no"
    found = any(c is not None for c in S.solve_right(a, a, bound))
    rf = "yes" if found else ("no" if S.exact_divisors else "unknown")
    partner = next((b for b in elems if S.mul(S.mul(a, b), a) == a), None)
    return ElementClass(lc, single, rf, partner)


def has_pairwise_right_identities(S):
    if not S.finite:
        raise Unsupported("pairwise right identities are only decided on finite semigroups")
    t = S.table
    for a in range(t.n):
        for b in range(a, t.n):
            if not any(t.rows[a][s] == a and t.rows[b][s] == b for s in range(t.n)):
                return False
    return True
