"""Shared random generators for the property tests."""

import random

from hypothesis import strategies as st

from sareg import Ring
from oracles import monomials

exponents = lambda n, top=4: st.lists(st.integers(0, top), min_size=n, max_size=n).map(tuple)


def random_poly(ring: Ring, rng: random.Random, deg: int | None = None, terms: int = 4):
    """A random polynomial; homogeneous of degree ``deg`` when given."""
    fld = ring.field
    data = {}
    for _ in range(terms):
        d = deg if deg is not None else rng.randint(0, 3)
        m = rng.choice(monomials(ring.nvars, d))
        data[m] = fld.random(rng)
    return ring.from_dict(data)


@st.composite
def polys(draw, ring: Ring, deg=None):
    seed = draw(st.integers(0, 10**9))
    return random_poly(ring, random.Random(seed), deg)
