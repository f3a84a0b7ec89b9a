"""Random small semigroups for the property suites."""
from __future__ import annotations

import random

from .congruences import PairSet
from .core import transformation_semigroup


def random_semigroup(rng, max_order=6, monoid=False, tries=500):
    """A transformation semigroup of order at most ``max_order``.

    Generated by one to three random maps on two to four points; with
    ``monoid`` the identity map is added.  The order is drawn uniformly
    first so that small orders do not dominate.
    """
    target = rng.randint(min(2, max_order), max_order)
    fallback = None
    for _ in range(tries):
        degree = rng.randint(2, 4)
        gens = [tuple(rng.randrange(degree) for _ in range(degree)) for _ in range(rng.randint(1, 3))]
        S = transformation_semigroup(gens, degree, with_identity=monoid, limit=max_order)
        if S is None:
            continue
        if S.order == target:
            return S
        fallback = fallback or S
    if fallback is None:
        raise RuntimeError("no semigroup found within the order limit")
    return fallback


def random_semigroups(seed, count, max_order=6, monoid=False):
    rng = random.Random(seed)
    return [random_semigroup(rng, max_order, monoid) for _ in range(count)]


def random_pairs(rng, S, max_pairs=3):
    elems = list(S.elements())
    k = rng.randint(0, max_pairs)
    return PairSet(S, [(rng.choice(elems), rng.choice(elems)) for _ in range(k)])
