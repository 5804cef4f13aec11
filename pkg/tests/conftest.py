"""Shared builders for the test suite.

Algebras and chain-semigroup handles are cached per session: the fleet
below is rebuilt by many test modules and handle construction does the
full complex/pi1 pipeline.
"""

import random
from functools import lru_cache

from pgsemi.catalog import parse_source
from pgsemi.chainsemigroup import ChainSemigroupHandle, INFINITE

# Canonical test fleet.  Every member's components classify decisively
# (trivial or free), so chain products never come back Undecided.
FLEET = [
    "kinyon",
    "band:2",
    "band:3",
    "band:4",
    "tl:2",
    "tl:3",
    "tl:4",
    "tl:5",
    "motzkin:3",
    "motzkin:4",
    "brauer:3",
    "brauer:4",
]

FINITE_SIZES = {
    "kinyon": 10,
    "band:2": 4,
    "tl:2": 2,
    "tl:3": 5,
    "tl:4": 14,
    "tl:5": 42,
}


@lru_cache(maxsize=None)
def bundle(src):
    return parse_source(src)


@lru_cache(maxsize=None)
def handle(src):
    return ChainSemigroupHandle(bundle(src).algebra)


def random_chain(h, rng, hops=5):
    """A chain built by multiplying a few random projection chains."""
    c = h.projection_chain(rng.randrange(h.algebra.size))
    for _ in range(rng.randrange(1, hops + 1)):
        c = h.product(c, h.projection_chain(rng.randrange(h.algebra.size)))
    return c


@lru_cache(maxsize=None)
def chain_pool(src, seed=0, size=48):
    """Sampling pool for a fleet member: the whole semigroup when finite,
    otherwise ``size`` seeded random chains."""
    h = handle(src)
    if h.size() is not INFINITE:
        return tuple(h.enumerate())
    rng = random.Random(seed)
    return tuple(random_chain(h, rng) for _ in range(size))
