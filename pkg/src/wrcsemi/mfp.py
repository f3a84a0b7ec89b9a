"""Annihilator witnesses in monoid free products.

Indexing: ``x = x_n * ... * x_1`` is stored left to right as a tuple of
blocks, so ``x_1`` is the last block and meets ``a_1``, the first block of
a right multiplier ``a``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .congruences import PairSet, XSequence, annihilator_generators, find_xsequence, verify_xsequence
from .core import DEFAULT_BOUND, AlgebraError, Unsupported
from .witnesses import WitnessReport

MFP_BOUND = 3


@dataclass
class MfpContext:
    F: object
    x: tuple
    N: int | None
    inverses: dict = field(default_factory=dict)  # i -> right inverses of x_i, i < N
    t: dict = field(default_factory=dict)  # i -> chosen t_i
    X: dict = field(default_factory=dict)  # i -> PairSet generating r(x_i), i <= N
    prefixes: dict = field(default_factory=dict)  # i -> t_1 * ... * t_i
    depth: int | None = None

    def letter(self, i):
        """``(factor, x_i)`` for ``1 <= i <= n``."""
        return self.x[len(self.x) - i]

    @property
    def n(self):
        return len(self.x)

    def factor(self, i):
        return self.F.factors[self.letter(i)[0]]


def mfp_context(F, x, generators=None, choose=None, bound=DEFAULT_BOUND, depth=None):
    """Build the data used by the witness for ``r_F(x)``.

    ``generators`` optionally maps ``i`` to a generating set of
    ``r_{M}(x_i)`` inside its factor; ``choose`` maps ``i`` to a right
    inverse ``t_i`` (first right inverse in enumeration order otherwise).
    """
    x = F.canonical(tuple(x))
    ctx = MfpContext(F, x, None, depth=depth)
    for i in range(1, len(x) + 1):
        k, xi = ctx.letter(i)
        inv = F.right_inverses(k, xi, bound)
        if not inv:
            ctx.N = i
            break
        ctx.inverses[i] = inv
    top = ctx.N if ctx.N is not None else 0
    for i in range(1, top):
        k = ctx.letter(i)[0]
        ti = (choose or {}).get(i, ctx.inverses[i][0])
        if ti not in ctx.inverses[i]:
            raise AlgebraError("t_%d is not a right inverse of x_%d" % (i, i))
        ctx.t[i] = ti
    for i in range(1, top + 1):
        k, xi = ctx.letter(i)
        if generators is not None and i in generators:
            ctx.X[i] = generators[i]
        else:
            ctx.X[i] = annihilator_generators(F.factors[k], xi)
    acc = ()
    ctx.prefixes[0] = acc
    for i in range(1, top):
        acc = F.mul(acc, ((ctx.letter(i)[0], ctx.t[i]),))
        ctx.prefixes[i] = acc
    return ctx


def _embed(ctx, i, y):
    k = ctx.letter(i)[0]
    f = ctx.F.factors[k]
    return () if y == f.identity else ((k, y),)


def mfp_pairs(ctx):
    """The generating set ``X`` (one pair per orbit)."""
    F = ctx.F
    out = []
    if ctx.N is None:
        return PairSet(F)
    for i in range(1, ctx.N + 1):
        T = ctx.prefixes[i - 1]
        for p, q in ctx.X[i].generators():
            out.append((F.mul(T, _embed(ctx, i, p)), F.mul(T, _embed(ctx, i, q))))
    return PairSet(F, out)


def _lift(ctx, i, y, y2, W):
    """Lift an ``X_i``-sequence ``y -> y2`` to ``T_{i-1}*y*W -> T_{i-1}*y2*W``."""
    F = ctx.F
    f = ctx.factor(i)
    seq = find_xsequence(f, ctx.X[i], y, y2, depth=ctx.depth)
    if seq is None:
        raise AlgebraError("X_%d does not generate r(x_%d)" % (i, i))
    T = ctx.prefixes[i - 1]
    steps = []
    for p, q, c in seq.steps:
        mult = F.mul(() if c is None else _embed(ctx, i, c), W)
        steps.append((F.mul(T, _embed(ctx, i, p)), F.mul(T, _embed(ctx, i, q)), mult if mult else None))
    src = F.mul(F.mul(T, _embed(ctx, i, y)), W)
    dst = F.mul(F.mul(T, _embed(ctx, i, y2)), W)
    return XSequence(src, dst, steps)


def _first_solution(f, x, y):
    for c in f.enumerate(DEFAULT_BOUND):
        if f.mul(x, c) == y:
            return c
    raise AlgebraError("no solution found")


def mfp_chain(ctx, a):
    """An ``X``-sequence from ``a`` to the representative of ``x * a``.

    The walk follows the proof: right inverses at the front of ``a`` are
    swapped for the fixed ``t_i``; a head absorbed by ``x_j`` is removed;
    letters equal to ``x_{j-1}`` are folded back into ``t_{j-1} x_{j-1}``;
    and a head in ``x_j M`` is normalised to the first solution.
    """
    F = ctx.F
    a = F.canonical(tuple(a))
    steps = []
    cur = a

    def push(seq):
        nonlocal cur
        if seq.source != cur:
            raise AlgebraError("internal chain mismatch")
        steps.extend(seq.steps)
        cur = seq.target

    j, W = 1, a
    head = None
    while True:
        if head is None:
            if W and W[0][0] == ctx.letter(j)[0]:
                head, W = W[0][1], W[1:]
                continue
            if j >= 2 and W and W[0][0] == ctx.letter(j - 1)[0]:
                k, xj1 = ctx.letter(j - 1)
                f = F.factors[k]
                w1, rest = W[0][1], W[1:]
                if w1 == xj1:
                    g = f.mul(ctx.t[j - 1], xj1)
                    j, W = j - 1, rest
                    if g != f.identity:
                        push(_lift(ctx, j, g, f.identity, W))
                    continue
                if f.solve_right(xj1, w1):
                    j, W = j - 1, rest
                    head = f.mul(ctx.t[j], w1)
                    continue
            return XSequence(a, cur, steps)
        k, xj = ctx.letter(j)
        f = F.factors[k]
        y = f.mul(xj, head)
        if y == f.identity:
            push(_lift(ctx, j, head, ctx.t[j], W))
            j, head = j + 1, None
        elif y == xj:
            push(_lift(ctx, j, head, f.identity, W))
            head = None
        else:
            c0 = _first_solution(f, xj, y)
            push(_lift(ctx, j, head, c0, W))
            return XSequence(a, cur, steps)


def _reduction_type(ctx, a):
    """``("a"|"b", l)`` for the reduction of ``x * a``."""
    F = ctx.F
    l = 1
    while True:
        if l > ctx.n or l > len(a):
            return "a", l
        k, xl = ctx.letter(l)
        if a[l - 1][0] != k:
            return "a", l
        if F.factors[k].mul(xl, a[l - 1][1]) != F.factors[k].identity:
            return "b", l
        l += 1


def case_label(ctx, a, b):
    ta, tb = _reduction_type(ctx, a)[0], _reduction_type(ctx, b)[0]
    if ta == tb:
        return "(i)" if ta == "a" else "(ii)"
    return "(iii)"


def _finite_letters(ctx):
    F = ctx.F
    for i in range(1, ctx.n + 1):
        k, xi = ctx.letter(i)
        f = F.factors[k]
        if not f.finite:
            return False
    return True


def mfp_sequence(ctx, a, b):
    """An ``X``-sequence from ``a`` to ``b`` for ``(a, b)`` in ``r_F(x)``."""
    F = ctx.F
    a, b = F.canonical(tuple(a)), F.canonical(tuple(b))
    if F.mul(ctx.x, a) != F.mul(ctx.x, b):
        raise AlgebraError("(%s, %s) is not in the annihilator" % (F.format(a), F.format(b)))
    if a == b:
        return XSequence(a, b, [])
    if ctx.N is None:
        raise AlgebraError("x is a unit; its annihilator is the identity relation")
    ca, cb = mfp_chain(ctx, a), mfp_chain(ctx, b)
    if ca.target != cb.target:
        raise AlgebraError("chains end at different representatives")
    return ca.then(cb.reversed())


def mfp_witness(ctx, bound=MFP_BOUND, certify=True):
    """The generating set ``X`` for ``r_F(x)`` with normal-form and certificate checks."""
    F = ctx.F
    X = mfp_pairs(ctx)
    hyps = [("x_i t_i = 1 for i < N", all(
        F.factors[ctx.letter(i)[0]].mul(ctx.letter(i)[1], ctx.t[i]) == F.factors[ctx.letter(i)[0]].identity
        for i in ctx.t))]
    report = WitnessReport("mfp", "r(%s)" % F.format(ctx.x), X, "failed", hyps, bound=bound, depth=ctx.depth)
    report.notes.append("N = %s" % ctx.N)
    if ctx.N is None:
        if not _finite_letters(ctx):
            raise Unsupported("every letter of x is right invertible in an infinite factor")
        for i in range(1, ctx.n + 1):
            k, xi = ctx.letter(i)
            f = F.factors[k]
            inv = ctx.inverses[i][0]
            if f.mul(inv, xi) != f.identity:
                raise Unsupported("x has a one-sided inverse only")
        report.notes.append("x is a unit: the annihilator is the identity relation")
    if not all(F.mul(ctx.x, p) == F.mul(ctx.x, q) for p, q in X):
        report.notes.append("a generating pair is outside the annihilator")
        return report
    groups = {}
    for s in F.enumerate(bound):
        groups.setdefault(F.mul(ctx.x, s), []).append(s)
    certs = []
    if ctx.N is None:
        if any(len(c) > 1 for c in groups.values()):
            report.notes.append("a unit with a non-trivial annihilator")
            return report
    elif certify:
        for cls in groups.values():
            if len(cls) < 2:
                continue
            chains = [mfp_chain(ctx, s) for s in cls]
            if len({c.target for c in chains}) != 1:
                report.notes.append("chains end at different representatives")
                return report
            for c1, c2 in itertools.combinations(chains, 2):
                certs.append(c1.then(c2.reversed()))
    for cert in certs:
        v = verify_xsequence(F, X, cert)
        if not v:
            report.notes.append("certificate fails at step %s: %s" % (v.step, v.reason))
            return report
    report.certificates = certs
    report.verdict = "bounded"
    return report
