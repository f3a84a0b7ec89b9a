"""Naive reference implementations used as test oracles.

Nothing here shares code with the package algorithms: only ``elements()``
and ``mul`` of a semigroup handle are used.
"""
import itertools


def naive_closure(S, pairs):
    """Least right congruence containing ``pairs``, by all-pairs fixpoint."""
    elems = list(S.elements())
    rel = {(x, x) for x in elems}
    rel |= set(pairs) | {(q, p) for p, q in pairs}
    changed = True
    while changed:
        changed = False
        new = set()
        for p, q in rel:
            for s in elems:
                new.add((S.mul(p, s), S.mul(q, s)))
        by_left = {}
        for p, q in rel:
            by_left.setdefault(p, set()).add(q)
        for p, q in rel:
            for r in by_left.get(q, ()):
                new.add((p, r))
        new |= {(q, p) for p, q in rel}
        if not new <= rel:
            rel |= new
            changed = True
    return rel


def naive_annihilator(S, a):
    elems = list(S.elements())
    return {(s, t) for s in elems for t in elems if S.mul(a, s) == S.mul(a, t)}


def relation_of(S, cong):
    """The pair set of a package ``RightCongruence`` on finite ``S``."""
    elems = list(S.elements())
    return {(s, t) for s in elems for t in elems if cong.contains(s, t)}


def principal(S, a, elems=None):
    elems = list(S.elements()) if elems is None else elems
    return {a} | {S.mul(a, s) for s in elems}


def generated_right_ideal(S, gens):
    out = set()
    for g in gens:
        out |= principal(S, g)
    return out


def is_right_congruence(S, rel):
    elems = list(S.elements())
    for x in elems:
        if (x, x) not in rel:
            return False
    for p, q in rel:
        if (q, p) not in rel:
            return False
        if any((S.mul(p, s), S.mul(q, s)) not in rel for s in elems):
            return False
    for (p, q), (q2, r) in itertools.product(rel, rel):
        if q == q2 and (p, r) not in rel:
            return False
    return True


def words(letters, maxlen, empty=True):
    out = [""] if empty else []
    for n in range(1, maxlen + 1):
        out += ["".join(w) for w in itertools.product(letters, repeat=n)]
    return out


def vectors(rank, maxdeg):
    return [v for v in itertools.product(range(maxdeg + 1), repeat=rank) if sum(v) <= maxdeg]


def word_multiples(u, universe):
    return {w for w in universe if w.startswith(u)}


def vector_multiples(u, universe):
    return {w for w in universe if all(x >= y for x, y in zip(w, u))}


def apply_sequence(S, seq):
    """Re-check an X-sequence by hand: returns the chain of values or None."""
    cur = seq.source
    for p, q, c in seq.steps:
        lhs = p if c is None else S.mul(p, c)
        if lhs != cur:
            return None
        cur = q if c is None else S.mul(q, c)
    return cur if cur == seq.target else None
