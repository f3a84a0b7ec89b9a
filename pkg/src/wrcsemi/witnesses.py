"""Generating sets produced by the closure theorems, with certificates and checks."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .congruences import (
    PairSet,
    XSequence,
    annihilator,
    annihilator_generators,
    find_xsequence,
    generate_congruence,
    verify_xsequence,
)
from .constructions import AdjoinZero, DirectProduct, Subsemigroup
from .core import DEFAULT_BOUND, ZERO, AlgebraError, Unsupported
from .ideals import in_principal, intersect_principal, r_comparable, right_ideal_generators

FREE_PRODUCT_BOUND = 3


@dataclass
class WitnessReport:
    """A generating set for a target right congruence and how it was checked.

    ``verdict`` is one of ``oracle-exact``, ``bounded``, ``failed`` or
    ``inapplicable``.  Bounded reports carry the grade and search depth.
    """

    tag: str
    target: str
    generators: PairSet | None
    verdict: str
    hypotheses: list = field(default_factory=list)
    certificates: list = field(default_factory=list)
    bound: int | None = None
    depth: int | None = None
    notes: list = field(default_factory=list)
    parts: list = field(default_factory=list)

    @property
    def ok(self):
        return self.verdict in ("oracle-exact", "bounded") and all(p.ok for p in self.parts)


def _sound(S, gens, a):
    return all(S.mul(a, p) == S.mul(a, q) for p, q in gens)


def _check_certificates(S, X, certs):
    for cert in certs:
        v = verify_xsequence(S, X, cert)
        if not v:
            return "certificate %s -> %s fails at step %s: %s" % (
                S.format(cert.source), S.format(cert.target), v.step, v.reason)
    return None


def _finish(report, S, a, certs=()):
    """Fill in the verdict against ``r_S(a)`` on a finite ambient."""
    X = report.generators
    report.certificates = list(certs)
    if not _sound(S, X, a):
        report.verdict = "failed"
        report.notes.append("a generating pair is outside the annihilator")
        return report
    bad = _check_certificates(S, X, report.certificates)
    if bad:
        report.verdict = "failed"
        report.notes.append(bad)
        return report
    if generate_congruence(S, X).labels != annihilator(S, a).labels:
        report.verdict = "failed"
        report.notes.append("generated congruence differs from the annihilator")
        return report
    report.verdict = "oracle-exact"
    return report


def _annihilator_pairs(S, a):
    r = annihilator(S, a)
    return [(s, t) for cls in r.classes() for s in cls for t in cls if s != t]


def generates_as_right_ideal(S, U, bound=DEFAULT_BOUND):
    elems = S.elements() if S.finite else S.enumerate(bound)
    return all(any(in_principal(S, u, s, bound) for u in U) for s in elems)


def _factor_through(S, U, s, bound=DEFAULT_BOUND):
    """Some ``(u, c)`` with ``u`` in ``U`` and ``s = u c``, ``c`` in ``S^1``."""
    for u in U:
        sols = S.solve_right(u, s, bound)
        if sols:
            return u, sols[0]
    raise AlgebraError("%s is not in U S^1" % S.format(s))


# ---------------------------------------------------------------------------
# regular elements


def regular_certificate(S, a, b, U, s, t):
    """The two-step sequence ``s = u s', (b a u) s' = (b a v) t', v t' = t``."""
    if s == t:
        return XSequence(s, t, [])
    u, s1 = _factor_through(S, U, s)
    v, t1 = _factor_through(S, U, t)
    ba = S.mul(b, a)
    return XSequence(s, t, [(u, S.mul(ba, u), s1), (S.mul(ba, v), v, t1)])


def regular_witness(S, a, b, U, certify=True):
    S.check(a, b)
    hyps = [("a = a b a", S.mul(S.mul(a, b), a) == a)]
    if S.finite:
        hyps.append(("S = U S^1", generates_as_right_ideal(S, U)))
    X = PairSet(S, [(S.mul(S.mul(b, a), u), u) for u in U])
    report = WitnessReport("regular", "r(%s)" % S.format(a), X, "failed", hyps)
    if not all(ok for _, ok in hyps):
        report.verdict = "inapplicable"
        return report
    if not S.finite:
        report.verdict = "oracle-exact" if _sound(S, X, a) else "failed"
        report.notes.append("inclusion checked; generation follows from the two-step certificates")
        return report
    certs = [regular_certificate(S, a, b, U, s, t) for s, t in _annihilator_pairs(S, a)] if certify else []
    return _finish(report, S, a, certs)


def regular_partner(S, a):
    t = S.table
    i = t.index[a]
    for j in range(t.n):
        if t.rows[t.rows[i][j]][i] == i:
            return t.elements[j]
    return None


# ---------------------------------------------------------------------------
# homomorphic images


def image_witness(phi, a, X=None, certify=True):
    """``X phi`` as a generating set of ``r_T(a phi)``."""
    S, T = phi.source, phi.target
    if not (S.finite and T.finite):
        raise Unsupported("image witnesses are checked on finite semigroups")
    if X is None:
        X = annihilator_generators(S, a)
    b = phi(a)
    image = {(phi(s), phi(t)) for s, t in _annihilator_pairs(S, a)}
    target = set(_annihilator_pairs(T, b))
    missing = sorted(target - image, key=repr)
    hyps = [("r_S(a) phi = r_T(a phi)", not missing and image <= target)]
    Y = X.map(phi, T)
    report = WitnessReport("image", "r(%s)" % T.format(b), Y, "failed", hyps)
    if missing:
        s, t = missing[0]
        report.verdict = "inapplicable"
        report.notes.append("(%s,%s) has no preimage in r_S(a)" % (T.format(s), T.format(t)))
        return report
    certs = []
    if certify:
        pre = {}
        for s, t in _annihilator_pairs(S, a):
            pre.setdefault((phi(s), phi(t)), (s, t))
        for pair in sorted(target, key=repr):
            s, t = pre[pair]
            seq = find_xsequence(S, X, s, t)
            if seq is None:
                report.notes.append("X does not generate r_S(a)")
                return report
            certs.append(seq.map(phi))
    return _finish(report, T, b, certs)


# ---------------------------------------------------------------------------
# subsemigroups and small extensions


def ideal_complement_witness(S, T, a, X=None, bound=DEFAULT_BOUND, depth=None):
    """``X ∩ (T x T)`` as a generating set of ``r_T(a)``.

    ``T`` is a :class:`Subsemigroup` of ``S`` whose complement is an ideal.
    """
    if X is None:
        X = annihilator_generators(S, a)
    hyps = [("a in T", T.member(a)), ("S \\ T is an ideal", T.complement_is_ideal != "no")]
    Y = X.restrict(T.member)
    Y = PairSet(T, Y.generators())
    report = WitnessReport("ideal-complement", "r_T(%s)" % T.format(a), Y, "failed", hyps)
    if not all(ok for _, ok in hyps):
        report.verdict = "inapplicable"
        return report
    if T.finite:
        certs = [find_xsequence(T, Y, s, t) for s, t in _annihilator_pairs(T, a)]
        if any(c is None for c in certs):
            report.notes.append("some pair of r_T(a) is not reached")
            return report
        return _finish(report, T, a, certs)
    return bounded_generation(report, T, a, bound, depth)


def bounded_generation(report, S, a, bound, depth=None):
    """Certify every pair of ``r_S(a)`` up to ``bound`` by BFS."""
    X = report.generators
    report.bound, report.depth = bound, depth
    if not _sound(S, X, a):
        report.verdict = "failed"
        report.notes.append("a generating pair is outside the annihilator")
        return report
    elems = S.enumerate(bound)
    groups = {}
    for s in elems:
        groups.setdefault(S.mul(a, s), []).append(s)
    certs = []
    for cls in groups.values():
        for s, t in itertools.combinations(cls, 2):
            seq = find_xsequence(S, X, s, t, depth=depth, bound=bound, max_grade=bound + 1)
            if seq is None:
                report.verdict = "failed"
                report.notes.append("no certificate for (%s,%s) within the bound" % (S.format(s), S.format(t)))
                return report
            certs.append(seq)
    bad = _check_certificates(S, X, certs)
    if bad:
        report.verdict = "failed"
        report.notes.append(bad)
        return report
    report.certificates = certs
    report.verdict = "bounded"
    return report


def small_extension_witness(S, T, a, X=None, alpha=None, complement=None):
    """``X ∪ (r_S(a) ∩ (S\\T)^2) ∪ {(u, alpha_u)}`` as a generating set of ``r_S(a)``.

    ``T`` is a large :class:`Subsemigroup` of finite ``S``; ``alpha`` maps
    ``u`` in ``S \\ T`` to a chosen ``alpha_u`` in ``T`` (first match by
    default).
    """
    if not S.finite:
        raise Unsupported("small extensions are checked on finite semigroups")
    inside = [x for x in S.elements() if T.member(x)]
    outside = complement if complement is not None else [x for x in S.elements() if not T.member(x)]
    if X is None:
        X = annihilator_generators(T, a)
    au = {u: S.mul(a, u) for u in outside}
    chosen = {}
    hyps = [("a in T", T.member(a))]
    for u in outside:
        matches = [v for v in inside if S.mul(a, v) == au[u]]
        if not matches:
            continue
        if alpha is not None and u in alpha:
            if alpha[u] not in matches:
                hyps.append(("alpha(%s) is valid" % S.format(u), False))
                continue
            chosen[u] = alpha[u]
        else:
            chosen[u] = matches[0]
    pairs = list(X.generators())
    pairs += [(u, v) for u, v in itertools.combinations(outside, 2) if au[u] == au[v]]
    pairs += list(chosen.items())
    Y = PairSet(S, pairs)
    report = WitnessReport("small-extension", "r(%s)" % S.format(a), Y, "failed", hyps)
    if not all(ok for _, ok in hyps):
        report.verdict = "inapplicable"
        return report
    return _finish(report, S, a, _small_extension_certificates(S, T, a, X, Y, chosen))


def _small_extension_certificates(S, T, a, X, Y, chosen):
    certs = []
    for s, t in _annihilator_pairs(S, a):
        ins, int_ = T.member(s), T.member(t)
        if ins and int_:
            seq = find_xsequence(T, X, s, t)
            certs.append(XSequence(s, t, seq.steps))
        elif not ins and not int_:
            certs.append(XSequence(s, t, [(s, t, None)]))
        elif not ins:
            v = chosen[s]
            rest = find_xsequence(T, X, v, t)
            certs.append(XSequence(s, t, [(s, v, None)] + rest.steps))
        else:
            v = chosen[t]
            rest = find_xsequence(T, X, s, v)
            certs.append(XSequence(s, t, rest.steps + [(v, t, None)]))
    return certs


def adjoin_zero_witness(S, U=None, generators=None):
    """Generating sets for every ``r_{S^0}(a)`` from those of ``S``.

    ``generators`` maps each ``a`` in ``S`` to a generating set of
    ``r_S(a)`` (computed if omitted).  The report for ``0`` is the
    regular-element witness ``{(0, u) : u in U ∪ {0}}``; the others are
    small-extension witnesses, attached as ``parts``.
    """
    if not S.finite:
        raise Unsupported("adjoin-zero witnesses are checked on finite semigroups")
    if U is None:
        U, _ = right_ideal_generators(S)
    S0 = AdjoinZero(S)
    T = Subsemigroup(S0, lambda x: x != ZERO, S.description)
    ok_u = generates_as_right_ideal(S, U)
    zero = regular_witness(S0, ZERO, ZERO, list(U) + [ZERO])
    zero.tag = "adjoin-zero"
    zero.hypotheses.insert(0, ("S = U S^1 before adjoining 0", ok_u))
    if not ok_u:
        zero.verdict = "inapplicable"
        return zero
    for a in S.elements():
        X = None
        if generators is not None:
            X = PairSet(T, generators[a].generators())
        zero.parts.append(small_extension_witness(S0, T, a, X))
    return zero


# ---------------------------------------------------------------------------
# direct products


def pairwise_right_identity(S, x, y):
    """Some ``d`` in ``S`` with ``x d = x`` and ``y d = y``, or ``None``."""
    t = S.table
    i, j = t.index[x], t.index[y]
    for d in range(t.n):
        if t.rows[i][d] == i and t.rows[j][d] == j:
            return t.elements[d]
    return None


def _real_multipliers(S, seq):
    """Replace each multiplier 1 by a right identity of both pair entries."""
    steps = []
    for p, q, c in seq.steps:
        if c is None:
            c = pairwise_right_identity(S, p, q)
            if c is None:
                raise AlgebraError("no right identity for (%s,%s)" % (S.format(p), S.format(q)))
        steps.append((p, q, c))
    return steps


def _real_factor(S, U, s):
    u, c = _factor_through(S, U, s)
    if c is None:
        c = pairwise_right_identity(S, u, u)
    return u, c


def product_certificate(S, T, X, Y, U, V, src, dst, cache=None):
    """An interleaved ``Z``-sequence from ``src`` to ``dst`` in ``S x T``.

    A shorter side is padded with steps ``((u,p'),(u,q'))`` where the
    finished side's element factors as ``u c`` with ``u`` in ``U``; the
    repeated ``(q_m, q_m)`` pair would not lie in ``Z`` in general.
    """
    (s, t), (s2, t2) = src, dst
    cache = {} if cache is None else cache

    def seq(M, gens, x, y):
        key = (id(M), tuple(gens.generators()), x, y)
        if key not in cache:
            found = find_xsequence(M, gens, x, y)
            if found is None:
                raise AlgebraError("pair not generated in a factor")
            cache[key] = _real_multipliers(M, found)
        return cache[key]

    if s == s2 and t == t2:
        return XSequence(src, dst, [])
    if t == t2:
        v, t1 = _real_factor(T, V, t)
        steps = [((p, v), (q, v), (c, t1)) for p, q, c in seq(S, X, s, s2)]
        return XSequence(src, dst, steps)
    if s == s2:
        u, s1 = _real_factor(S, U, s)
        steps = [((u, p), (u, q), (s1, c)) for p, q, c in seq(T, Y, t, t2)]
        return XSequence(src, dst, steps)
    left, right = seq(S, X, s, s2), seq(T, Y, t, t2)
    n = max(len(left), len(right))
    steps = []
    for i in range(n):
        if i < len(left) and i < len(right):
            (p, q, c), (p1, q1, c1) = left[i], right[i]
            steps.append(((p, p1), (q, q1), (c, c1)))
        elif i < len(right):
            u, s1 = _real_factor(S, U, s2)
            p1, q1, c1 = right[i]
            steps.append(((u, p1), (u, q1), (s1, c1)))
        else:
            v, t1 = _real_factor(T, V, t2)
            p, q, c = left[i]
            steps.append(((p, v), (q, v), (c, t1)))
    return XSequence(src, dst, steps)


def product_witness(S, T, a, b, X=None, Y=None, U=None, V=None, certify=True, cache=None):
    if not (S.finite and T.finite):
        raise Unsupported("product witnesses are checked on finite semigroups")
    from .core import has_pairwise_right_identities

    X = annihilator_generators(S, a) if X is None else X
    Y = annihilator_generators(T, b) if Y is None else Y
    U = right_ideal_generators(S)[0] if U is None else U
    V = right_ideal_generators(T)[0] if V is None else V
    P = DirectProduct(S, T)
    hyps = [
        ("S has pairwise right identities", has_pairwise_right_identities(S)),
        ("T has pairwise right identities", has_pairwise_right_identities(T)),
        ("S = U S^1", generates_as_right_ideal(S, U)),
        ("T = V T^1", generates_as_right_ideal(T, V)),
    ]
    Xg, Yg = X.generators(), Y.generators()
    Xs = Xg + [(q, p) for p, q in Xg]
    Ys = Yg + [(q, p) for p, q in Yg]
    Z = [((p, p1), (q, q1)) for p, q in Xs for p1, q1 in Ys]
    Z += [((u, p1), (u, q1)) for u in U for p1, q1 in Ys]
    Z += [((p, v), (q, v)) for p, q in Xs for v in V]
    Z = PairSet(P, Z)
    report = WitnessReport("product", "r(%s)" % P.format((a, b)), Z, "failed", hyps)
    if not all(ok for _, ok in hyps):
        report.verdict = "inapplicable"
        return report
    certs = []
    if certify:
        cache = {} if cache is None else cache
        for src, dst in _annihilator_pairs(P, (a, b)):
            certs.append(product_certificate(S, T, X, Y, U, V, src, dst, cache))
    return _finish(report, P, (a, b), certs)


# ---------------------------------------------------------------------------
# semigroup free products


def _embed(F, j, s):
    return ((j, s),)


def _lift_suffix(F, j, seq, w):
    """Lift a factor sequence ``y -> y'`` to ``y*w -> y'*w`` in ``F``."""
    steps = []
    for p, q, c in seq.steps:
        mult = w if c is None else F.mul(((j, c),), w) if w else ((j, c),)
        steps.append((((j, p),), ((j, q),), mult if mult else None))
    src = F.mul(((j, seq.source),), w) if w else ((j, seq.source),)
    dst = F.mul(((j, seq.target),), w) if w else ((j, seq.target),)
    return XSequence(src, dst, steps)


def _sfp_chain(F, j, an, X, e, U, s, depth):
    """A ``Y``-sequence from ``s`` to a representative of its class."""
    Sj = F.factors[j]
    if not s or s[0][0] != j:
        return XSequence(s, s, [])
    s1, w = s[0][1], s[1:]
    y = Sj.mul(an, s1)
    if y == an and w:
        seq = find_xsequence(Sj, X, s1, e, depth=depth)
        head = _lift_suffix(F, j, seq, w)
        u, v = _factor_through(F, U, w)
        return head.then(XSequence(head.target, w, [(F.mul(((j, e),), u), u, v)]))
    c0 = next(c for c in Sj.enumerate(DEFAULT_BOUND) if Sj.mul(an, c) == y)
    seq = find_xsequence(Sj, X, s1, c0, depth=depth)
    return _lift_suffix(F, j, seq, w)


def sfp_witness(F, a, X=None, e=None, U=None, bound=FREE_PRODUCT_BOUND, depth=None):
    """``Y = X`` or ``X ∪ {(e*u, u)}`` as a generating set of ``r_F(a)``."""
    j, an = a[-1]
    Sj = F.factors[j]
    if X is None:
        X = annihilator_generators(Sj, an)
    if e is None:
        sols = [c for c in Sj.solve_right(an, an) if c is not None]
        e = sols[0] if sols else None
    factorisable = e is not None
    hyps = [("a_n right factorisable", factorisable)]
    pairs = [(_embed(F, j, p), _embed(F, j, q)) for p, q in X.generators()]
    if factorisable:
        if U is None:
            U = []
            for i, f in enumerate(F.factors):
                gens, ev = right_ideal_generators(f)
                if gens is None:
                    hyps.append(("factor %d = U_%d S^1 with U_%d finite" % (i + 1, i + 1, i + 1), False))
                    continue
                U.extend(_embed(F, i, g) for g in gens)
            hyps.append(("finitely many factors, each finitely generated as a right ideal",
                         all(ok for _, ok in hyps[1:])))
        pairs += [(F.mul(_embed(F, j, e), u), u) for u in U]
    Y = PairSet(F, pairs)
    case = "(2)" if factorisable else "(1)"
    report = WitnessReport("sfp", "r(%s)" % F.format(a), Y, "failed", hyps, bound=bound, depth=depth)
    report.notes.append("case %s" % case)
    if factorisable and not all(ok for _, ok in hyps[1:]):
        report.verdict = "inapplicable"
        report.notes.append("neither hypothesis (1) nor (2) holds, so F is not FRE")
        return report
    if not _sound(F, Y, a):
        report.notes.append("a generating pair is outside the annihilator")
        return report
    groups = {}
    for s in F.enumerate(bound):
        groups.setdefault(F.mul(a, s), []).append(s)
    certs = []
    for cls in groups.values():
        if len(cls) < 2:
            continue
        chains = [_sfp_chain(F, j, an, X, e, U, s, depth) for s in cls]
        base = chains[0]
        for ch in chains[1:]:
            if ch.target != base.target:
                report.notes.append("chains end at different representatives")
                return report
            certs.append(ch.then(base.reversed()))
    bad = _check_certificates(F, Y, certs)
    if bad:
        report.notes.append(bad)
        return report
    report.certificates = certs
    report.verdict = "bounded"
    return report


# ---------------------------------------------------------------------------
# right ideal Howson witnesses


@dataclass
class RihWitness:
    tag: str
    pair: tuple
    generators: tuple
    verdict: str
    hypotheses: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    @property
    def ok(self):
        return self.verdict == "oracle-exact"


def _right_ideal_set(S, gens):
    t = S.table
    out = set(gens)
    for g in gens:
        i = t.index[g]
        out.update(t.elements[t.rows[i][j]] for j in range(t.n))
    return out


def _strict_ideal_set(S, a):
    t = S.table
    i = t.index[a]
    return {t.elements[t.rows[i][j]] for j in range(t.n)}


def rih_image_witness(phi, a, b, X=None):
    """``X phi`` as generators of ``u T^1 ∩ v T^1`` where ``u, v = a phi, b phi``."""
    S, T = phi.source, phi.target
    if not (S.finite and T.finite):
        raise Unsupported("checked on finite semigroups")
    u, v = phi(a), phi(b)
    lhs = {phi(x) for x in _strict_ideal_set(S, a) & _strict_ideal_set(S, b)}
    rhs = _strict_ideal_set(T, u) & _strict_ideal_set(T, v)
    hyps = [("(aS ∩ bS) phi = uT ∩ vT", lhs == rhs), ("u, v R-incomparable", not r_comparable(T, u, v))]
    if X is None:
        X = intersect_principal(S, a, b).generators
    gens = tuple(dict.fromkeys(phi(x) for x in X))
    w = RihWitness("rih-image", (u, v), gens, "failed", hyps)
    if not all(ok for _, ok in hyps):
        w.verdict = "inapplicable"
        return w
    target = _right_ideal_set(T, [u]) & _right_ideal_set(T, [v])
    w.verdict = "oracle-exact" if _right_ideal_set(T, gens) == target else "failed"
    return w


def _right_factorisable(S):
    t = S.table
    return all(any(t.rows[i][j] == i for j in range(t.n)) for i in range(t.n))


def rih_product_witness(S, T, x, y, Xs=None, Xt=None):
    """Pairwise products of factor generators for ``x P^1 ∩ y P^1``, ``P = S x T``."""
    if not (S.finite and T.finite):
        raise Unsupported("checked on finite semigroups")
    (a, c), (b, d) = x, y
    hyps = [("S right factorisable", _right_factorisable(S)), ("T right factorisable", _right_factorisable(T))]
    Xs = intersect_principal(S, a, b).generators if Xs is None else Xs
    Xt = intersect_principal(T, c, d).generators if Xt is None else Xt
    gens = tuple(itertools.product(Xs, Xt))
    w = RihWitness("rih-product", (x, y), gens, "failed", hyps)
    if not all(ok for _, ok in hyps):
        w.verdict = "inapplicable"
        return w
    P = DirectProduct(S, T)
    target = _right_ideal_set(P, [x]) & _right_ideal_set(P, [y])
    w.verdict = "oracle-exact" if _right_ideal_set(P, gens) == target else "failed"
    if w.verdict == "failed":
        w.notes.append("derived construction did not reproduce the intersection")
    return w
