"""Counterexample fixtures at finite rank ``n`` with checkable claims.

Objects that are infinite in the original constructions are kept
symbolic (multiplication by case analysis) and probed up to a grade
bound.  Claims that something is *not* finitely generated are checked as
growth in ``n``: the number of irreducible generators found rises with
the rank.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .congruences import (
    annihilator,
    annihilator_generators,
    content,
    _bounded_generators,
)
from .constructions import DirectProduct, ReesQuotient, semigroup_free_product
from .core import (
    AlgebraError,
    FreeCommutative,
    FreeMonoid,
    Semigroup,
    TableSemigroup,
    check_associative,
    cyclic_group,
    left_zero_semigroup,
    null_semigroup,
)
from .ideals import in_principal, minimal_generators, r_comparable, right_ideal_generators
from .witnesses import regular_witness, sfp_witness


def _vectors(rank, top):
    out = []
    for total in range(1, top + 1):
        for cut in itertools.combinations(range(total + rank - 1), rank - 1):
            prev, v = -1, []
            for c in cut + (total + rank - 1,):
                v.append(c - prev - 1)
                prev = c
            out.append(tuple(v))
    return out


def _add(u, v):
    return tuple(x + y for x, y in zip(u, v))


def _sub(w, u):
    d = tuple(x - y for x, y in zip(w, u))
    return d if min(d) >= 0 else None


def _fmt_vec(v):
    return "[" + ",".join(map(str, v)) + "]"


def _parse_vec(text):
    text = text.strip()
    if not (text.startswith("[") and text.endswith("]")):
        raise AlgebraError("expected a vector like [1,0], got %r" % text)
    return tuple(int(p) for p in text[1:-1].split(","))


class _Symbolic(Semigroup):
    specials = ()

    def contains(self, x):
        return x in self.specials or (isinstance(x, tuple) and len(x) == 2 and x[0] in ("f", "bar"))

    def format(self, x):
        if isinstance(x, str):
            return x
        kind, v = x
        return ("~" if kind == "bar" else "") + _fmt_vec(v)

    def parse(self, text):
        text = text.strip()
        if text in self.specials:
            return text
        if text.startswith("~"):
            return ("bar", _parse_vec(text[1:]))
        return ("f", _parse_vec(text))


class BarredFreeCommutative(_Symbolic):
    """Free commutative ``F`` of rank ``n`` with a barred copy and zero, plus extensions.

    ``level="T"``: ``F ∪ F̄ ∪ {0}`` with ``u v̄ = ū v = (uv)‾`` and
    ``ū v̄ = 0``.  ``level="S"`` adds ``a, b`` with ``au = bu = ua = ub = ū``
    and every other product involving ``a`` or ``b`` equal to 0 (including
    ``aa, ab, ba, bb``).  ``level="M"`` adds ``1`` and a unit ``g`` swapping
    ``a`` and ``b`` and fixing ``T``.
    """

    def __init__(self, n, level="T"):
        self.n = n
        self.level = level
        self.specials = {"T": ("0",), "S": ("0", "a", "b"), "M": ("0", "a", "b", "1", "g")}[level]
        self.identity = "1" if level == "M" else None
        self.zero = "0"
        self.description = "barred(%d,%s)" % (n, level)

    def contains(self, x):
        if isinstance(x, tuple):
            return super().contains(x) and len(x[1]) == self.n and min(x[1]) >= 0 and sum(x[1]) > 0
        return x in self.specials

    def grade(self, x):
        return 1 if isinstance(x, str) and x != "1" else 0 if x == "1" else sum(x[1])

    def enumerate(self, bound):
        out = [s for s in self.specials if self.grade(s) <= bound]
        vecs = _vectors(self.n, bound)
        out += [("f", v) for v in vecs] + [("bar", v) for v in vecs]
        return out

    def mul(self, x, y):
        if x == "1":
            return y
        if y == "1":
            return x
        if x == "g" or y == "g":
            other = y if x == "g" else x
            if other == "g":
                return "1"
            return {"a": "b", "b": "a"}.get(other, other)
        if x == "0" or y == "0":
            return "0"
        if isinstance(x, str) or isinstance(y, str):
            if isinstance(x, str) and isinstance(y, str):
                return "0"
            v = y if isinstance(x, str) else x
            return ("bar", v[1]) if v[0] == "f" else "0"
        if x[0] == "f" and y[0] == "f":
            return ("f", _add(x[1], y[1]))
        if x[0] == "bar" and y[0] == "bar":
            return "0"
        return ("bar", _add(x[1], y[1]))

    def solve_right(self, p, u, bound=6):
        if isinstance(u, tuple) and isinstance(p, tuple):
            sols = [None] if p == u else []
            d = _sub(u[1], p[1])
            if d is not None and sum(d) > 0:
                if p[0] == "f":
                    sols.append((u[0], d))
                elif u[0] == "bar":
                    sols.append(("f", d))
            if p[1] == u[1]:
                if p[0] == "f" and u[0] == "bar":
                    sols += [s for s in ("a", "b") if s in self.specials]
                if p[0] == u[0] and self.level == "M":
                    sols += ["1", "g"]
            return sols
        return super().solve_right(p, u, bound)


class BarredIdeal(_Symbolic):
    """Free commutative monoid ``F`` of rank ``n`` with a zero and extra ``a`` (and ``e``).

    ``level="T"``: ``{a} ∪ F^0`` with ``a1 = 1a = a`` and ``at = ta = 0``
    otherwise.  ``level="S"`` adds an idempotent ``e`` with ``ea = ae = a``
    and ``eu = ue = 0`` for ``u`` in ``F^0 \\ {1}``.
    """

    def __init__(self, n, level="T"):
        self.n = n
        self.level = level
        self.specials = ("a", "0") if level == "T" else ("a", "0", "e")
        self.identity = ("f", (0,) * n)
        self.zero = "0"
        self.description = "adjoined(%d,%s)" % (n, level)

    def contains(self, x):
        if isinstance(x, tuple):
            return x[0] == "f" and len(x[1]) == self.n and min(x[1]) >= 0
        return x in self.specials

    def grade(self, x):
        return 1 if isinstance(x, str) else sum(x[1])

    def enumerate(self, bound):
        out = [self.identity] + [s for s in self.specials if bound >= 1]
        return out + [("f", v) for v in _vectors(self.n, bound)]

    def format(self, x):
        if x == self.identity:
            return "1"
        return super().format(x)

    def parse(self, text):
        if text.strip() == "1":
            return self.identity
        return super().parse(text)

    def mul(self, x, y):
        one = self.identity
        if x == one:
            return y
        if y == one:
            return x
        if x == "0" or y == "0":
            return "0"
        if x == "e" and y == "e":
            return "e"
        if {x, y} == {"e", "a"}:
            return "a"
        if isinstance(x, str) or isinstance(y, str):
            return "0"
        return ("f", _add(x[1], y[1]))


class InfiniteLeftZero(Semigroup):
    """Left zero semigroup on the positive integers; the grade of ``k`` is ``k``."""

    description = "left_zero(inf)"

    def mul(self, x, y):
        return x

    def contains(self, x):
        return isinstance(x, int) and x >= 1

    def grade(self, x):
        return x

    def enumerate(self, bound):
        return list(range(1, bound + 1))

    def format(self, x):
        return "l%d" % x

    def parse(self, text):
        return int(text.strip().lstrip("l"))


class WordIdealExtension(Semigroup):
    """``F ∪ {a_t : t in T} ∪ {0}`` over the barred semigroup ``T`` at level S.

    ``F`` is free on ``x1..xn, a, b`` and maps onto ``T``; ``a_t w =
    a_{t (w phi)}`` and every other product touching the ideal is 0.
    """

    def __init__(self, n):
        self.n = n
        self.T = BarredFreeCommutative(n, "S")
        self.letters = ["x%d" % (i + 1) for i in range(n)] + ["a", "b"]
        self.zero = "0"
        self.description = "word_ideal(%d)" % n
        self._word_cache = {}

    def phi(self, w):
        T = self.T
        acc = None
        for k in w:
            if k < self.n:
                img = ("f", tuple(1 if i == k else 0 for i in range(self.n)))
            else:
                img = "a" if k == self.n else "b"
            acc = img if acc is None else T.mul(acc, img)
        return acc

    def contains(self, x):
        return x == "0" or (isinstance(x, tuple) and x[0] in ("w", "i"))

    def grade(self, x):
        if x == "0":
            return 1
        return len(x[1]) if x[0] == "w" else self.T.grade(x[1]) + 1

    def enumerate(self, bound):
        out = ["0"]
        k = len(self.letters)
        for length in range(1, bound + 1):
            out += [("w", w) for w in itertools.product(range(k), repeat=length)]
        out += [("i", t) for t in self.T.enumerate(bound - 1)] if bound >= 1 else []
        return [x for x in out if self.grade(x) <= bound]

    def solve_right(self, p, u, bound=6):
        if u == "0" or p == "0" or not isinstance(u, tuple):
            return super().solve_right(p, u, bound)
        sols = [None] if p == u else []
        if p[0] == "w" and u[0] == "w":
            k = len(p[1])
            if len(u[1]) > k and u[1][:k] == p[1]:
                sols.append(("w", u[1][k:]))
        elif p[0] == "i" and u[0] == "i":
            sols += [c for c in self._words(bound) if self.mul(p, c) == u]
        return sols

    def _words(self, bound):
        if bound not in self._word_cache:
            self._word_cache[bound] = [x for x in self.enumerate(bound) if x != "0" and x[0] == "w"]
        return self._word_cache[bound]

    def mul(self, x, y):
        if x == "0" or y == "0":
            return "0"
        if x[0] == "w" and y[0] == "w":
            return ("w", x[1] + y[1])
        if x[0] == "i" and y[0] == "w":
            return ("i", self.T.mul(x[1], self.phi(y[1])))
        return "0"

    def format(self, x):
        if x == "0":
            return "0"
        if x[0] == "w":
            return ".".join(self.letters[k] for k in x[1])
        return "a<%s>" % self.T.format(x[1])


# ---------------------------------------------------------------------------
# fixtures


@dataclass
class ClaimResult:
    claim: str
    passed: bool
    evidence: str
    measure: int | None = None


@dataclass
class Claim:
    name: str
    statement: str
    check: object
    growth: bool = False

    def run(self):
        try:
            passed, evidence, measure = self.check()
        except Exception as exc:  # a crashing claim is a failing claim
            return ClaimResult(self.name, False, "error: %s" % exc)
        return ClaimResult(self.name, bool(passed), evidence, measure)


@dataclass
class Fixture:
    name: str
    n: int
    handles: dict
    claims: list = field(default_factory=list)

    def run(self):
        return [c.run() for c in self.claims]


def _window_intersection(S, a, b, bound):
    return [z for z in S.enumerate(bound) if in_principal(S, a, z, bound) and in_principal(S, b, z, bound)]


def _assoc(S, bound=3):
    def check():
        check_associative(S, bound)
        return True, "associative to grade %d" % bound, None
    return check


def _unit(n, i):
    return tuple(1 if k == i else 0 for k in range(n))


def _rih_lsse(n):
    T, S, M = (BarredFreeCommutative(n, lv) for lv in "TSM")
    bound = 4
    claims = [Claim("assoc-%s" % H.level, "%s is associative" % H.description, _assoc(H)) for H in (T, S, M)]

    def closed_form(H):
        """Check both displayed families of intersections in ``H``."""
        def check():
            count = 0
            fs = [("f", v) for v in _vectors(n, 2)]
            window = H.enumerate(bound)
            for (u, v) in itertools.combinations(fs, 2):
                for x, y in ((u, v), (("bar", u[1]), ("bar", v[1])), (u, ("bar", v[1]))):
                    if r_comparable(H, x, y, bound):
                        continue
                    m = tuple(max(p, q) for p, q in zip(u[1], v[1]))
                    gens = [("bar", m)]
                    if x[0] == y[0] == "f":
                        # without an identity the barred lcm is not reached from m
                        gens = [("f", m)] + (gens if H.identity is None else [])
                    lhs = set(_window_intersection(H, x, y, bound))
                    rhs = {z for z in window if any(in_principal(H, g, z, bound) for g in gens)}
                    if lhs != rhs:
                        return False, "mismatch for %s, %s" % (H.format(x), H.format(y)), None
                    count += 1
            return True, "%d incomparable pairs match the closed form to grade %d" % (count, bound), None
        return check

    def s_not_rih():
        inter = _window_intersection(S, "a", "b", bound)
        expected = {z for z in S.enumerate(bound) if z == "0" or (isinstance(z, tuple) and z[0] == "bar")}
        if set(inter) != expected:
            return False, "aS^1 ∩ bS^1 differs from the barred copy plus 0", None
        gens = minimal_generators(S, inter, bound)
        bars = {("bar", _unit(n, i)) for i in range(n)}
        ok = bars <= set(gens) and len(gens) >= n
        return ok, "%d irreducible generators: %s" % (len(gens), ", ".join(S.format(g) for g in gens)), len(gens)

    claims += [
        Claim("T-rih", "intersections in T follow the closed forms", closed_form(T)),
        Claim("M-rih", "intersections in M follow the closed forms", closed_form(M)),
        Claim("S-not-rih", "aS^1 ∩ bS^1 is the barred copy plus 0 and needs every barred generator",
              s_not_rih, growth=True),
    ]
    return Fixture("rih-large-subsemigroup", n, {"T": T, "S": S, "M": M}, claims)


def _rih_ideal(n):
    box = 3 + n
    P = FreeCommutative(2, monoid=False, positive=True)
    P0 = FreeCommutative(2)

    def ambient():
        for u, v in itertools.combinations(P0.enumerate(3), 2):
            m = tuple(max(p, q) for p, q in zip(u, v))
            window = P0.enumerate(6)
            lhs = {z for z in window if in_principal(P0, u, z) and in_principal(P0, v, z)}
            rhs = {z for z in window if in_principal(P0, m, z)}
            if lhs != rhs:
                return False, "closed form fails for %s, %s" % (u, v), None
        return True, "principal intersections in N0 x N0 are principal (componentwise max)", None

    def growth():
        pts = [(x, y) for x in range(1, box + 1) for y in range(1, box + 1)]
        inter = [z for z in pts if in_principal(P, (1, 2), z, 2 * box) and in_principal(P, (2, 1), z, 2 * box)]
        if set(inter) != {z for z in pts if z[0] >= 3 and z[1] >= 3}:
            return False, "intersection is not the quadrant x, y >= 3", None
        gens = minimal_generators(P, inter, 2 * box)
        want = 2 * (box - 2) - 1
        return len(gens) == want, "%d irreducibles in the box [3,%d]^2 (expected %d)" % (len(gens), box, want), len(gens)

    return Fixture("rih-ideal", n, {"N0xN0": P0, "NxN": P}, [
        Claim("ambient-rih", "N0 x N0 has principal intersections", ambient),
        Claim("ideal-growth", "(1,2)NxN^1 ∩ (2,1)NxN^1 needs ever more generators", growth, growth=True),
    ])


def _rih_ideal_rees(n):
    S = WordIdealExtension(n)
    bound = 3
    letters = "".join(chr(ord("c") + i) for i in range(n + 2))
    F = FreeMonoid(letters, monoid=False)

    def ideal_null():
        elems = [x for x in S.enumerate(bound) if x == "0" or x[0] == "i"]
        for x in elems:
            for y in elems:
                if S.mul(x, y) != "0":
                    return False, "the ideal is not null", None
        return True, "the ideal is a null semigroup, so principal ideals meet in {0}", None

    def quotient():
        window = F.enumerate(4)
        for u, v in itertools.combinations(F.enumerate(2), 2):
            lhs = {w for w in window if in_principal(F, u, w) and in_principal(F, v, w)}
            rhs = {w for w in window if (v.startswith(u) and w.startswith(v))
                   or (u.startswith(v) and w.startswith(u))}
            if lhs != rhs:
                return False, "prefix rule fails for %s, %s" % (u, v), None
        return True, "the quotient is a free semigroup with zero; prefix rule verified", None

    def not_rih():
        a_a, a_b = ("i", "a"), ("i", "b")
        inter = _window_intersection(S, a_a, a_b, bound)
        gens = minimal_generators(S, inter, bound)
        bars = {("i", ("bar", _unit(n, i))) for i in range(n)}
        ok = bars <= set(gens)
        return ok, "%d irreducible generators of a<a>S^1 ∩ a<b>S^1" % len(gens), len(gens)

    return Fixture("rih-ideal-rees", n, {"S": S}, [
        Claim("assoc", "S is associative", _assoc(S, 2)),
        Claim("ideal-rih", "the ideal is RIH", ideal_null),
        Claim("quotient-rih", "the Rees quotient is RIH", quotient),
        Claim("S-not-rih", "S is not RIH (irreducible count grows)", not_rih, growth=True),
    ])


def _fre_rees_quotient(n):
    base = FreeMonoid("".join(chr(ord("a") + i) for i in range(n)), monoid=False)
    Q = ReesQuotient(base, lambda w: len(w) >= 2, "length >= 2")
    N = null_semigroup(n + 1)

    def null():
        elems = Q.enumerate(3)
        ok = all(Q.mul(x, y) == Q.zero for x in elems for y in elems) and len(elems) == n + 1
        return ok, "F/I is null of order %d" % len(elems), None

    def growth():
        a = N.parse("a1")
        X = annihilator_generators(N, a)
        U, _ = right_ideal_generators(N)
        ok = X.size() == n and len(U) == n
        return ok, "r(a) needs %d pairs; S = US^1 needs %d generators" % (X.size(), len(U)), X.size()

    return Fixture("fre-rees-quotient", n, {"F/I": Q, "null": N}, [
        Claim("null", "F/I is a null semigroup", null),
        Claim("witness-growth", "annihilator witnesses grow with the rank", growth, growth=True),
    ])


def _fre_adjoined_identity(n):
    S = left_zero_semigroup(n)
    from .constructions import AdjoinIdentity

    S1 = AdjoinIdentity(S)

    def s1_fre():
        for a in S1.elements():
            r = regular_witness(S1, a, a, [S1.identity])
            if r.verdict != "oracle-exact":
                return False, "regular witness fails at %s" % S1.format(a), None
        return True, "every r(a) in S^1 is generated by {(a a 1, 1)}", None

    def u_size():
        U, _ = right_ideal_generators(S)
        return len(U) == n, "minimal U has %d elements" % len(U), len(U)

    return Fixture("fre-adjoined-identity", n, {"S": S, "S1": S1}, [
        Claim("S1-fre", "S^1 is FRE via regular witnesses", s1_fre),
        Claim("U-growth", "S = US^1 needs all n elements", u_size, growth=True),
    ])


def _bounded_partition(S, pairs, bound):
    """Classes of the closure of ``pairs`` inside the grade window."""
    elems = S.enumerate(bound)
    index = {x: i for i, x in enumerate(elems)}
    parent = list(range(len(elems)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    work = list(pairs)
    while work:
        u, v = work.pop()
        if u not in index or v not in index:
            continue
        ru, rv = find(index[u]), find(index[v])
        if ru == rv:
            continue
        parent[ru] = rv
        work.extend((S.mul(u, s), S.mul(v, s)) for s in elems)
    return {x: find(index[x]) for x in elems}


def _same_partition(S, p1, p2):
    elems = list(p1)
    return all((p1[x] == p1[y]) == (p2[x] == p2[y]) for x in elems for y in elems)


def _fre_lsse(n):
    T, S = BarredIdeal(n, "T"), BarredIdeal(n, "S")
    one = S.identity
    grade = 5

    def annihilator_partition(H, a, bound):
        elems = H.enumerate(bound)
        return {x: H.mul(a, x) for x in elems}

    def r_a():
        target = annihilator_partition(S, "a", grade)
        got = _bounded_partition(S, [(one, "e"), ("a", "0")], grade)
        if not _same_partition(S, target, got):
            return False, "closure of {(1,e),(a,0)} differs from r_S(a)", None
        return True, "⟨(1,e),(a,0)⟩ = r_S(a) on all elements of grade <= %d" % grade, None

    def r_u():
        for i in range(n):
            u = ("f", _unit(n, i))
            target = annihilator_partition(S, u, grade)
            got = _bounded_partition(S, [("e", "a"), ("a", "0")], grade)
            if not _same_partition(S, target, got):
                return False, "r_S(%s) differs from Δ ∪ {e,a,0}^2" % S.format(u), None
        return True, "r_S(x_i) = ⟨(e,a),(a,0)⟩ = Δ ∪ {e,a,0}^2 to grade %d" % grade, None

    def t_growth():
        bound = 3
        cont = [x for x in T.enumerate(bound) if x != one]
        gens = minimal_generators(T, cont, bound)
        X = _bounded_generators(T, annihilator(T, "a"), bound)
        ok = len(gens) == n + 1 and X.size() >= n
        return ok, "C(r_T(a))T^1 = T \\ {1} needs %d generators; window witness has %d pairs" % (
            len(gens), X.size()), len(gens)

    return Fixture("fre-large-submonoid", n, {"T": T, "S": S}, [
        Claim("assoc-T", "T is associative", _assoc(T)),
        Claim("assoc-S", "S is associative", _assoc(S)),
        Claim("r(a)", "r_S(a) is generated by {(1,e),(a,0)}", r_a),
        Claim("r(u)", "r_S(u) = Δ ∪ {e,a,0}^2 for u a generator of F", r_u),
        Claim("T-growth", "T is not FRE (content ideal generators grow)", t_growth, growth=True),
    ])


def _fre_ideal_rees(n):
    T = BarredIdeal(n, "T")
    Q = ReesQuotient(T, lambda x: x in ("a", "0"), "{a,0}")
    bound = 3

    def ideal():
        I = TableSemigroup(["a", "0"], [[1, 1], [1, 1]], "{a,0}")
        ok = all(annihilator_generators(I, x).size() <= 1 for x in I.elements())
        return ok, "I = {a,0} is a finite null semigroup, hence FRE", None

    def quotient():
        one, zero = Q.identity, Q.zero
        for x in Q.enumerate(bound + 1):
            X = [(one, zero)] if x == zero else []
            target = {y: Q.mul(x, y) for y in Q.enumerate(bound + 1)}
            if not _same_partition(Q, target, _bounded_partition(Q, X, bound + 1)):
                return False, "r(%s) is not generated by %s" % (Q.format(x), X), None
        return True, "T/I = F^0: r(0) = ⟨(1,0)⟩ and r(u) = Δ otherwise, to grade %d" % (bound + 1), None

    def growth():
        cont = [x for x in T.enumerate(bound) if x != T.identity]
        gens = minimal_generators(T, cont, bound)
        return len(gens) == n + 1, "C(r_T(a))T^1 needs %d generators" % len(gens), len(gens)

    return Fixture("fre-ideal-rees", n, {"T": T, "T/I": Q}, [
        Claim("ideal-fre", "the ideal is FRE", ideal),
        Claim("quotient-fre", "the Rees quotient is FRE (bounded witnesses stay small)", quotient),
        Claim("T-growth", "T is not FRE", growth, growth=True),
    ])


def _fre_direct_product(n):
    S, T = null_semigroup(2), cyclic_group(n)
    P = DirectProduct(S, T)
    a = S.parse("a1")

    def growth():
        x = T.identity
        cont = content(P, annihilator(P, (a, x)))
        gens = minimal_generators(P, cont)
        need = {(a, t) for t in T.elements()}
        ok = need <= set(gens) and len(gens) == n
        return ok, "C(r((a,1)))P^1 needs %d generators, all of the form (a,t)" % len(gens), len(gens)

    return Fixture("fre-direct-product", n, {"S": S, "T": T, "SxT": P}, [
        Claim("content-growth", "the content ideal needs every (a,t)", growth, growth=True),
    ])


def _fre_free_product(n):
    E = TableSemigroup(["e"], [[0]], "trivial")
    L = InfiniteLeftZero()
    F = semigroup_free_product([E, L])
    Fn = semigroup_free_product([E, left_zero_semigroup(n)])

    def inapplicable():
        r = sfp_witness(F, ((0, 0),), bound=2)
        return r.verdict == "inapplicable", "witness for r(e): %s (%s)" % (r.verdict, "; ".join(r.notes)), None

    def surrogate():
        r = sfp_witness(Fn, ((0, 0),), bound=3)
        size = r.generators.size()
        return r.verdict == "bounded" and size == n, "finite surrogate of size %d: %d pairs, %s" % (
            n, size, r.verdict), size

    return Fixture("fre-free-product", n, {"F": F, "surrogate": Fn}, [
        Claim("hypothesis-fails", "neither free product hypothesis holds", inapplicable),
        Claim("witness-growth", "surrogate witnesses grow with n", surrogate, growth=True),
    ])


def _wrc_rees_quotient(n):
    letters = "".join(chr(ord("a") + i) for i in range(n))
    F = FreeMonoid(letters)
    Q = ReesQuotient(F, lambda w: len(w) >= 2, "length >= 2")
    names = ["1"] + list(letters) + ["0"]
    elems = ["", *letters, None]

    def fn(x, y):
        if x is None or y is None:
            return None
        z = x + y
        return None if len(z) >= 2 else z
    from .core import table_from_function

    Qt = table_from_function(elems, fn, names, "F/I")

    def free_wrc():
        for u, v in itertools.combinations(F.enumerate(2), 2):
            if r_comparable(F, u, v):
                continue
            if any(in_principal(F, u, w) and in_principal(F, v, w) for w in F.enumerate(4)):
                return False, "incomparable words share a multiple", None
        return True, "F is left cancellative and meets the prefix rule", None

    def growth():
        a = Qt.parse("a")
        cont = content(Qt, annihilator(Qt, a))
        gens = minimal_generators(Qt, cont)
        return len(gens) == n, "C(r(a)) generates with %d elements" % len(gens), len(gens)

    return Fixture("wrc-rees-quotient", n, {"F": F, "F/I": Q, "table": Qt}, [
        Claim("free-wrc", "the free monoid is WRC", free_wrc),
        Claim("quotient-growth", "F/I is not WRC (content ideal grows)", growth, growth=True),
    ])


def _wrc_lsse(n):
    base = _fre_lsse(n)
    S, T = base.handles["S"], base.handles["T"]
    bound = 4

    def s_rih():
        fs = [("f", v) for v in _vectors(n, 2)]
        window = S.enumerate(bound)
        for u, v in itertools.combinations(fs, 2):
            if r_comparable(S, u, v, bound):
                continue
            m = ("f", tuple(max(p, q) for p, q in zip(u[1], v[1])))
            lhs = set(_window_intersection(S, u, v, bound))
            rhs = {z for z in window if in_principal(S, m, z, bound)}
            if lhs != rhs:
                return False, "uS ∩ vS differs from max(u,v)S", None
        return True, "uS ∩ vS = max(u,v)S to grade %d; other principal ideals are finite" % bound, None

    claims = [c for c in base.claims if c.name in ("r(a)", "r(u)", "T-growth")]
    claims.insert(0, Claim("S-rih", "S is RIH", s_rih))
    return Fixture("wrc-large-submonoid", n, {"S": S, "T": T}, claims)


BUILDERS = {
    "rih-large-subsemigroup": _rih_lsse,
    "rih-ideal": _rih_ideal,
    "rih-ideal-rees": _rih_ideal_rees,
    "fre-rees-quotient": _fre_rees_quotient,
    "fre-adjoined-identity": _fre_adjoined_identity,
    "fre-large-submonoid": _fre_lsse,
    "fre-ideal-rees": _fre_ideal_rees,
    "fre-direct-product": _fre_direct_product,
    "fre-free-product": _fre_free_product,
    "wrc-rees-quotient": _wrc_rees_quotient,
    "wrc-large-submonoid": _wrc_lsse,
}


def build_fixture(name, n):
    if name not in BUILDERS:
        raise KeyError("unknown fixture %r; choose from %s" % (name, ", ".join(BUILDERS)))
    if not isinstance(n, int) or n < 1:
        raise ValueError("the rank n must be a positive integer")
    return BUILDERS[name](n)


@dataclass
class GalleryReport:
    results: list = field(default_factory=list)  # (fixture, n, ClaimResult)
    growth: list = field(default_factory=list)  # (fixture, claim, measures, monotone)

    @property
    def ok(self):
        return all(r.passed for _, _, r in self.results) and all(m for *_, m in self.growth)


def run_gallery(names=None, ns=(1, 2, 3)):
    names = list(BUILDERS) if not names else list(names)
    for name in names:
        if name not in BUILDERS:
            raise KeyError("unknown fixture %r" % name)
    ns = list(ns)
    if any(n < 1 for n in ns):
        raise ValueError("the rank n must be a positive integer")
    report = GalleryReport()
    for name in names:
        measures = {}
        for n in ns:
            fx = build_fixture(name, n)
            for claim, res in zip(fx.claims, fx.run()):
                report.results.append((name, n, res))
                if claim.growth:
                    measures.setdefault(claim.name, []).append(res.measure)
        for claim, ms in measures.items():
            mono = all(m is not None for m in ms) and all(x < y for x, y in zip(ms, ms[1:]))
            report.growth.append((name, claim, ms, mono))
    return report
