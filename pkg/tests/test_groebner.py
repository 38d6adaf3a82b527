import random

import pytest

from sareg import DegreeCapExceeded, NotHomogeneous, Ring, buchberger, divide, ideal_membership
from sareg.groebner import is_groebner, is_reduced, s_polynomial
from oracles import in_ideal
from strategies import random_poly

R = Ring(3)


def random_ideal_gens(ring, rng, count=3, degs=(1, 2, 3)):
    return [random_poly(ring, rng, rng.choice(degs), terms=3) for _ in range(count)]


def test_division_reexpansion():
    rng = random.Random(1)
    for _ in range(200):
        f = random_poly(R, rng, terms=6)
        divs = [g for g in (random_poly(R, rng, terms=2) for _ in range(rng.randint(1, 3))) if g]
        if not divs:
            continue
        q, r = divide(f, divs)
        assert sum((a * b for a, b in zip(q, divs)), R.zero()) + r == f
        for k, _ in r._terms:
            assert not any(R.key_divides(g.lead_key, k) for g in divs)


def test_division_by_zero_rejected():
    with pytest.raises(ZeroDivisionError):
        divide(R.var(0), [R.zero()])


def test_twisted_cubic():
    S = Ring(4)
    gb = buchberger([S.parse(t) for t in ("x0*x2 - x1^2", "x1*x3 - x2^2", "x0*x3 - x1*x2")])
    assert len(gb) == 3
    assert is_groebner(list(gb)) and is_reduced(list(gb))
    assert gb.contains(S.parse("x0*x2^2 - x1^2*x2"))
    assert not gb.contains(S.parse("x0*x1"))


def test_reduced_basis_unique():
    rng = random.Random(2)
    for _ in range(10):
        gens = random_ideal_gens(R, rng)
        # same ideal, scrambled generators
        other = list(gens)
        for i in range(len(other)):
            j = rng.randrange(len(other))
            if i != j and other[j].degree() >= other[i].degree():
                m = random_poly(R, rng, other[j].degree() - other[i].degree(), terms=1)
                other[j] = other[j] + m * other[i]
        rng.shuffle(other)
        gb1, gb2 = buchberger(gens), buchberger([g.scale(5) for g in other if g] + gens[:1])
        assert gb1 == gb2
        assert buchberger(list(gb1)) == gb1


def test_membership_matches_oracle():
    rng = random.Random(3)
    for _ in range(30):
        gens = random_ideal_gens(R, rng, count=2, degs=(2,))
        gb = buchberger(gens)
        inside = sum((random_poly(R, rng, 4 - g.degree(), 2) * g for g in gens), R.zero())
        outside = random_poly(R, rng, 4, 3)
        for f in (inside, outside):
            assert ideal_membership(f, gb) == in_ideal(f, gens, 3, R.modulus)


def test_s_polynomial_cancels_leads():
    f, g = R.parse("x0^2 + x1*x2"), R.parse("x0*x1 + x2^2")
    s = s_polynomial(f, g)
    assert s.lead_key < R.pack((2, 1, 0))


def test_rejects_inhomogeneous_and_degree_cap():
    with pytest.raises(NotHomogeneous):
        buchberger([R.parse("x0^2 + x1")])
    S = Ring(3)
    with pytest.raises(DegreeCapExceeded):
        buchberger([S.parse("x0^3 - x1^2*x2"), S.parse("x0*x1^2 - x2^3")], degree_cap=4)


def test_lex_basis():
    L = Ring(3, order=__import__("sareg").LEX)
    gb = buchberger([L.parse("x0*x1 - x2^2"), L.parse("x0^2 - x1*x2")])
    assert is_groebner(list(gb)) and is_reduced(list(gb))
