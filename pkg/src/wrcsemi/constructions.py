"""Semigroup constructions: adjoining 1/0, products, Rees quotients, free products."""
from __future__ import annotations

import itertools
import re

from .core import (
    DEFAULT_BOUND,
    ONE,
    ZERO,
    AlgebraError,
    Semigroup,
    Unsupported,
)

VALIDATION_BOUND = 6


def _split_top(text, open_="(", close=")", sep=","):
    """Split ``text`` on ``sep`` at bracket depth zero."""
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        if ch == sep and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return [p.strip() for p in parts]


class AdjoinIdentity(Semigroup):
    def __init__(self, base):
        self.base = base
        self.order = None if base.order is None else base.order + 1
        self.identity = ONE
        self.zero = base.zero
        self.left_cancellative = base.left_cancellative
        self.exact_divisors = base.exact_divisors
        self.description = "adjoin1(%s)" % base.description

    def mul(self, x, y):
        if x == ONE:
            return y
        if y == ONE:
            return x
        return self.base.mul(x, y)

    def contains(self, x):
        return x == ONE or self.base.contains(x)

    def grade(self, x):
        return 0 if x == ONE else self.base.grade(x)

    def enumerate(self, bound):
        return [ONE] + list(self.base.enumerate(bound))

    def format(self, x):
        return "1" if x == ONE else self.base.format(x)

    def parse(self, text):
        return ONE if text.strip() == "1" else self.base.parse(text)

    def solve_right(self, p, u, bound=DEFAULT_BOUND):
        if p == ONE:
            return ([None] if u == ONE else []) + [u]
        if u == ONE:
            return []
        sols = []
        for c in self.base.solve_right(p, u, bound):
            if c is None:
                sols.extend([None, ONE])
            else:
                sols.append(c)
        return sols

    def divides_two_sided(self, g, x, bound=DEFAULT_BOUND):
        if g == ONE:
            return True
        if x == ONE:
            return False
        return self.base.divides_two_sided(g, x, bound)


class AdjoinZero(Semigroup):
    def __init__(self, base):
        self.base = base
        self.order = None if base.order is None else base.order + 1
        self.identity = base.identity
        self.zero = ZERO
        self.description = "adjoin0(%s)" % base.description
        self.exact_divisors = base.exact_divisors

    def mul(self, x, y):
        if x == ZERO or y == ZERO:
            return ZERO
        return self.base.mul(x, y)

    def contains(self, x):
        return x == ZERO or self.base.contains(x)

    def grade(self, x):
        return 0 if x == ZERO else self.base.grade(x)

    def enumerate(self, bound):
        return list(self.base.enumerate(bound)) + [ZERO]

    def format(self, x):
        return "0" if x == ZERO else self.base.format(x)

    def parse(self, text):
        return ZERO if text.strip() == "0" else self.base.parse(text)

    def solve_right(self, p, u, bound=DEFAULT_BOUND):
        if p == ZERO:
            if u != ZERO:
                return []
            return [None] + self.enumerate(bound)
        if u == ZERO:
            return [ZERO]
        return list(self.base.solve_right(p, u, bound))

    def divides_two_sided(self, g, x, bound=DEFAULT_BOUND):
        if x == ZERO:
            return True
        if g == ZERO:
            return False
        return self.base.divides_two_sided(g, x, bound)


def adjoin_identity(S):
    """``S^1``: ``S`` itself when it already has an identity."""
    return S if S.identity is not None else AdjoinIdentity(S)


def adjoin_zero(S):
    return S if S.zero is not None else AdjoinZero(S)


class DirectProduct(Semigroup):
    def __init__(self, left, right):
        self.left, self.right = left, right
        if left.finite and right.finite:
            self.order = left.order * right.order
        self.identity = None
        if left.identity is not None and right.identity is not None:
            self.identity = (left.identity, right.identity)
        self.zero = None
        if left.zero is not None and right.zero is not None:
            self.zero = (left.zero, right.zero)
        self.left_cancellative = left.left_cancellative and right.left_cancellative
        self.exact_divisors = left.exact and right.exact
        self.description = "product(%s, %s)" % (left.description, right.description)

    def mul(self, x, y):
        return (self.left.mul(x[0], y[0]), self.right.mul(x[1], y[1]))

    def contains(self, x):
        return isinstance(x, tuple) and len(x) == 2 and self.left.contains(x[0]) and self.right.contains(x[1])

    def grade(self, x):
        return max(self.left.grade(x[0]), self.right.grade(x[1]))

    def enumerate(self, bound):
        return [(a, b) for a in self.left.enumerate(bound) for b in self.right.enumerate(bound)]

    def format(self, x):
        return "(%s,%s)" % (self.left.format(x[0]), self.right.format(x[1]))

    def parse(self, text):
        text = text.strip()
        if not (text.startswith("(") and text.endswith(")")):
            raise AlgebraError("expected a pair (x,y), got %r" % text)
        parts = _split_top(text[1:-1])
        if len(parts) != 2:
            raise AlgebraError("expected a pair (x,y), got %r" % text)
        return (self.left.parse(parts[0]), self.right.parse(parts[1]))

    def solve_right(self, p, u, bound=DEFAULT_BOUND):
        sols = [None] if p == u else []
        ls = [c for c in self.left.solve_right(p[0], u[0], bound) if c is not None]
        rs = [c for c in self.right.solve_right(p[1], u[1], bound) if c is not None]
        sols.extend(itertools.product(ls, rs))
        return sols

    def divides_two_sided(self, g, x, bound=DEFAULT_BOUND):
        if g == x:
            return True
        if self.finite:
            return super().divides_two_sided(g, x, bound)
        raise Unsupported("two-sided divisibility in %s" % self.description)


def direct_product(S, T):
    return DirectProduct(S, T)


# ---------------------------------------------------------------------------


def _check_ideal(S, member, bound):
    elems = S.enumerate(bound)
    inside = [i for i in elems if member(i)]
    for i in inside:
        for s in elems:
            if not member(S.mul(s, i)):
                return (s, i)
            if not member(S.mul(i, s)):
                return (i, s)
    return None


class ReesQuotient(Semigroup):
    def __init__(self, base, member, ideal_text="I"):
        self.base = base
        self.member = member
        self.zero = ZERO
        self.identity = None
        if base.identity is not None and not member(base.identity):
            self.identity = base.identity
        self.description = "rees(%s, %s)" % (base.description, ideal_text)
        if base.finite:
            self.order = sum(1 for x in base.elements() if not member(x)) + 1
            if self.order == 1:
                self.identity = ZERO

    def mul(self, x, y):
        if x == ZERO or y == ZERO:
            return ZERO
        z = self.base.mul(x, y)
        return ZERO if self.member(z) else z

    def contains(self, x):
        return x == ZERO or (self.base.contains(x) and not self.member(x))

    def grade(self, x):
        return 0 if x == ZERO else self.base.grade(x)

    def enumerate(self, bound):
        return [x for x in self.base.enumerate(bound) if not self.member(x)] + [ZERO]

    def format(self, x):
        return "0" if x == ZERO else self.base.format(x)

    def parse(self, text):
        if text.strip() == "0":
            return ZERO
        x = self.base.parse(text)
        if self.member(x):
            raise AlgebraError("%s lies in the ideal (it is 0 in the quotient)" % text)
        return x

    def solve_right(self, p, u, bound=DEFAULT_BOUND):
        if u == ZERO or p == ZERO:
            return super().solve_right(p, u, bound)
        return [c for c in self.base.solve_right(p, u, bound) if c is None or not self.member(c)]


def rees_quotient(S, member, ideal_text="I", bound=VALIDATION_BOUND):
    """``S/I`` for the ideal given by the membership predicate ``member``.

    The ideal property is checked exhaustively on finite ``S`` and to grade
    ``bound`` otherwise; a failure raises with the witnessing product.
    """
    bad = _check_ideal(S, member, bound)
    if bad is not None:
        x, y = bad
        raise AlgebraError(
            "not an ideal: %s * %s leaves it" % (S.format(x), S.format(y))
        )
    return ReesQuotient(S, member, ideal_text)


def generated_ideal(S, gens, bound=VALIDATION_BOUND):
    """Membership predicate of the two-sided ideal ``S^1 gens S^1``."""
    gens = list(gens)
    if S.finite:
        inside = {x for x in S.elements() if any(S.divides_two_sided(g, x) for g in gens)}
        return inside.__contains__
    return lambda x: any(S.divides_two_sided(g, x, bound) for g in gens)


# ---------------------------------------------------------------------------
# free products: elements are tuples of (factor index, factor element) blocks


class _FreeProduct(Semigroup):
    monoid_variant = False

    def __init__(self, factors):
        factors = list(factors)
        if not factors:
            raise AlgebraError("a free product needs at least one factor")
        self.factors = factors
        self.exact_divisors = all(f.exact for f in factors)
        inner = ", ".join(f.description for f in factors)
        self.description = "%s(%s)" % ("mfp" if self.monoid_variant else "sfp", inner)

    def _ident(self, i):
        return self.factors[i].identity if self.monoid_variant else None

    def canonical(self, x):
        out = []
        for i, s in x:
            if self.monoid_variant and s == self.factors[i].identity:
                continue
            if out and out[-1][0] == i:
                j, t = out.pop()
                y = self.factors[i].mul(t, s)
                if not (self.monoid_variant and y == self.factors[i].identity):
                    out.append((i, y))
            else:
                out.append((i, s))
        return tuple(out)

    def mul(self, x, y):
        if not x:
            return y
        if not y:
            return x
        if x[-1][0] != y[0][0]:
            return x + y
        return self.canonical(x + y)

    def contains(self, x):
        if not isinstance(x, tuple):
            return False
        if not x:
            return self.monoid_variant
        prev = None
        for blk in x:
            if not (isinstance(blk, tuple) and len(blk) == 2):
                return False
            i, s = blk
            if not (isinstance(i, int) and 0 <= i < len(self.factors)):
                return False
            if i == prev or not self.factors[i].contains(s):
                return False
            if self.monoid_variant and s == self.factors[i].identity:
                return False
            prev = i
        return True

    def grade(self, x):
        if not x:
            return 0
        return len(x) + max(self.factors[i].grade(s) for i, s in x)

    def _letters(self, i, inner_bound):
        f = self.factors[i]
        return [s for s in f.enumerate(inner_bound) if not (self.monoid_variant and s == f.identity)]

    def enumerate(self, bound):
        out = [()] if self.monoid_variant else []
        for k in range(1, bound + 1):
            inner = bound - k
            letters = [self._letters(i, inner) for i in range(len(self.factors))]

            def rec(prefix, last):
                if len(prefix) == k:
                    out.append(tuple(prefix))
                    return
                for i, lets in enumerate(letters):
                    if i == last:
                        continue
                    for s in lets:
                        prefix.append((i, s))
                        rec(prefix, i)
                        prefix.pop()

            rec([], None)
        return [x for x in out if self.grade(x) <= bound]

    def format(self, x):
        if not x:
            return "1"
        return "*".join(self._format_block(i, s) for i, s in x)

    def _format_block(self, i, s):
        return "%s@%d" % (self.factors[i].format(s), i + 1)

    def parse(self, text):
        text = text.strip()
        if text == "1" and self.monoid_variant:
            return ()
        blocks = []
        for part in _split_top(text, sep="*"):
            m = re.fullmatch(r"(.+)@(\d+)", part)
            if m:
                i = int(m.group(2)) - 1
                if not 0 <= i < len(self.factors):
                    raise AlgebraError("factor index out of range in %r" % part)
                blocks.append((i, self.factors[i].parse(m.group(1))))
                continue
            hits = []
            for i, f in enumerate(self.factors):
                try:
                    hits.append((i, f.parse(part)))
                except (AlgebraError, KeyError, ValueError):
                    pass
            if len(hits) != 1:
                what = "ambiguous" if hits else "unknown"
                raise AlgebraError("%s block %r; write it as name@factor" % (what, part))
            blocks.append(hits[0])
        return self.canonical(tuple(blocks))

    def elements(self):
        if not self.finite:
            raise Unsupported("%s is infinite" % self.description)
        return self.enumerate(1 if self.order > 1 else 0)

    def factor_elements(self, i, bound=DEFAULT_BOUND):
        return [((i, s),) for s in self._letters(i, bound)]


class SemigroupFreeProduct(_FreeProduct):
    def __init__(self, factors):
        super().__init__(factors)
        self.identity = None
        self.zero = None
        self.left_cancellative = False
        if len(self.factors) == 1 and self.factors[0].finite:
            self.order = self.factors[0].order

    def solve_right(self, p, u, bound=DEFAULT_BOUND):
        sols = [None] if p == u else []
        k = len(p)
        # concatenation: u = p ++ c
        if u[:k] == p and len(u) > k and u[k][0] != p[-1][0]:
            sols.append(u[k:])
        # boundary merge inside the factor of the last block of p
        i, h = p[-1]
        if len(u) >= k and u[: k - 1] == p[:-1] and u[k - 1][0] == i:
            rest = u[k:]
            for c in self.factors[i].solve_right(h, u[k - 1][1], bound):
                if c is not None:
                    sols.append(((i, c),) + rest)
        return sols


class MonoidFreeProduct(_FreeProduct):
    monoid_variant = True

    def __init__(self, factors):
        factors = list(factors)
        for f in factors:
            if f.identity is None:
                raise AlgebraError("monoid free product factor %s has no identity" % f.description)
        super().__init__(factors)
        self.identity = ()
        self.zero = None
        self.order = None
        if all(f.finite and f.order == 1 for f in factors):
            self.order = 1
            self.zero = ()
        elif len(factors) == 1 and factors[0].finite:
            self.order = factors[0].order
            z = factors[0].zero
            if z is not None:
                self.zero = ((0, z),)

    def right_inverses(self, i, h, bound=DEFAULT_BOUND):
        f = self.factors[i]
        return [c for c in f.solve_right(h, f.identity, bound) if c is not None and c != f.identity]

    def solve_right(self, p, u, bound=DEFAULT_BOUND):
        sols = set()
        if p == u:
            sols.add(None)
            sols.add(())
        k = len(p)

        def rec(r, cs):
            head = p[: k - r]
            last_c = cs[-1][0] if cs else None
            if u[: len(head)] == head:
                rest = u[len(head):]
                if rest:
                    if (not head or rest[0][0] != head[-1][0]) and rest[0][0] != last_c:
                        sols.add(tuple(cs) + rest)
                elif cs:
                    sols.add(tuple(cs))
            if not head:
                return
            i, h = head[-1]
            n = len(head)
            f = self.factors[i]
            if len(u) >= n and u[: n - 1] == head[:-1] and u[n - 1][0] == i:
                for c in f.solve_right(h, u[n - 1][1], bound):
                    if c is not None and c != f.identity:
                        sols.add(tuple(cs) + ((i, c),) + u[n:])
            for y in self.right_inverses(i, h, bound):
                rec(r + 1, cs + [(i, y)])

        rec(0, [])
        return sorted(sols, key=lambda c: (c is not None, repr(c)))


def semigroup_free_product(factors):
    return SemigroupFreeProduct(factors)


def monoid_free_product(factors):
    return MonoidFreeProduct(factors)


# ---------------------------------------------------------------------------


class Subsemigroup(Semigroup):
    def __init__(self, base, member, description=None):
        self.base = base
        self.member = member
        self.description = description or "sub(%s)" % base.description
        self.exact_divisors = base.exact_divisors
        self.left_cancellative = base.left_cancellative
        if base.finite:
            self.order = sum(1 for x in base.elements() if member(x))
            self.identity = self.find_identity()
            self.zero = self.find_zero()
        else:
            self.identity = base.identity if base.identity is not None and member(base.identity) else None
            self.zero = base.zero if base.zero is not None and member(base.zero) else None
        self.complement_is_ideal = None
        self.large = None
        if base.finite:
            self.large = "yes"
            self.complement_is_ideal = "yes" if _check_ideal(base, lambda x: not member(x), 0) is None else "no"
        else:
            bad = _check_ideal(base, lambda x: not member(x), VALIDATION_BOUND)
            self.complement_is_ideal = "no" if bad is not None else "unknown"
            self.large = "unknown"

    def mul(self, x, y):
        return self.base.mul(x, y)

    def contains(self, x):
        return self.base.contains(x) and self.member(x)

    def grade(self, x):
        return self.base.grade(x)

    def enumerate(self, bound):
        return [x for x in self.base.enumerate(bound) if self.member(x)]

    def format(self, x):
        return self.base.format(x)

    def parse(self, text):
        x = self.base.parse(text)
        if not self.member(x):
            raise AlgebraError("%s is outside the subsemigroup" % text)
        return x

    def solve_right(self, p, u, bound=DEFAULT_BOUND):
        return [c for c in self.base.solve_right(p, u, bound) if c is None or self.member(c)]


def subsemigroup(S, member, description=None, bound=VALIDATION_BOUND, complement=None):
    """Restrict ``S`` to ``{x : member(x)}`` after checking closure.

    ``complement`` optionally lists ``S \\ T`` for infinite ``S`` so that
    largeness and the ideal-complement flag can be decided exactly.
    """
    elems = S.enumerate(bound)
    inside = [x for x in elems if member(x)]
    for x in inside:
        for y in inside:
            if not member(S.mul(x, y)):
                raise AlgebraError(
                    "not closed: %s * %s = %s" % (S.format(x), S.format(y), S.format(S.mul(x, y)))
                )
    T = Subsemigroup(S, member, description)
    if complement is not None and not S.finite:
        T.large = "yes"
        comp = set(complement)
        ok = all(S.mul(s, i) in comp and S.mul(i, s) in comp for i in comp for s in S.enumerate(bound))
        T.complement_is_ideal = "yes" if ok else "no"
    return T


# ---------------------------------------------------------------------------


class Morphism:
    def __init__(self, source, target, fn, description="phi"):
        self.source = source
        self.target = target
        self.fn = fn
        self.description = description

    def __call__(self, x):
        return self.fn(x)

    def apply1(self, c):
        """Image of an ``S^1`` multiplier, sending the adjoined 1 to 1."""
        return None if c is None else self.fn(c)


def _morphism_failure(phi, bound):
    S, T = phi.source, phi.target
    elems = S.enumerate(bound)
    for x in elems:
        if not T.contains(phi(x)):
            return "image of %s is not in the target" % S.format(x)
    for x in elems:
        for y in elems:
            if phi(S.mul(x, y)) != T.mul(phi(x), phi(y)):
                return "phi(%s*%s) differs from phi(%s)*phi(%s)" % (
                    S.format(x), S.format(y), S.format(x), S.format(y))
    return None


def homomorphism(S, T, fn, description="phi", bound=VALIDATION_BOUND):
    phi = Morphism(S, T, fn, description)
    bad = _morphism_failure(phi, bound)
    if bad:
        raise AlgebraError("not a homomorphism: " + bad)
    return phi


def retraction(S, T, fn, description="phi", bound=VALIDATION_BOUND):
    """Validate ``fn: S -> T`` as a homomorphism fixing ``T`` pointwise.

    ``T`` must be a subsemigroup handle of ``S`` (same elements).
    """
    phi = homomorphism(S, T, fn, description, bound)
    for t in T.enumerate(bound):
        if fn(t) != t:
            raise AlgebraError("retraction moves %s" % T.format(t))
    return phi


def factor_retraction(F, i):
    """The retraction of a monoid free product onto its ``i``-th factor."""
    Mi = subsemigroup(
        F, lambda x: len(x) == 0 or (len(x) == 1 and x[0][0] == i), "factor %d" % (i + 1)
    )
    f = F.factors[i]

    def collapse(x):
        acc = f.identity
        for j, s in x:
            if j == i:
                acc = f.mul(acc, s)
        return () if acc == f.identity else ((i, acc),)

    return retraction(F, Mi, collapse, "collapse onto factor %d" % (i + 1), bound=4)
