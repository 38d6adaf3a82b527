"""Homogeneous ideals and the ideal-theoretic operations built on them.

Ideals are equal when their reduced Groebner bases are equal.  Intersections
use an auxiliary variable ``t`` of degree zero, eliminated first, so every
input stays homogeneous for the grading of the original variables.
"""

from __future__ import annotations

import functools
import itertools
import logging
import random
from typing import Iterable, MutableMapping, Sequence

import numpy as np

from .groebner import GroebnerBasis, buchberger, divide, DEFAULT_DEGREE_CAP
from .linalg import rank
from .polynomial import GREVLEX, MonomialOrder, Polynomial, Ring, RingMismatch, remap_variables, substitute_linear

log = logging.getLogger(__name__)


class GenericityFailure(RuntimeError):
    """No suitable random choice was found within the retry budget."""


class SaturationError(ValueError):
    pass


class HomogeneousIdeal:
    """An ideal given by homogeneous generators; its reduced Groebner basis is cached."""

    __slots__ = ("ring", "generators", "_gb")

    def __init__(self, ring: Ring, generators: Iterable[Polynomial] = (), groebner: GroebnerBasis | None = None):
        gens = []
        for g in generators:
            if g.ring != ring:
                raise RingMismatch("generator from another ring")
            if not g.is_homogeneous():
                raise ValueError("generators must be homogeneous")
            if g:
                gens.append(g)
        self.ring = ring
        self.generators = tuple(gens)
        self._gb = groebner

    @classmethod
    def parse(cls, ring: Ring, *texts: str) -> "HomogeneousIdeal":
        return cls(ring, [ring.parse(t) for t in texts])

    @property
    def groebner(self) -> GroebnerBasis:
        # a concurrent first access may compute the basis twice; both results are equal
        if self._gb is None:
            self._gb = buchberger(self.generators, self.ring, DEFAULT_DEGREE_CAP) if self.generators \
                else GroebnerBasis(self.ring, (), True)
        return self._gb

    def is_zero(self) -> bool:
        return not self.generators

    def is_unit(self) -> bool:
        if any(g.is_constant() for g in self.generators):
            return True
        return self.groebner.is_unit()

    def is_proper(self) -> bool:
        return not self.is_unit()

    def contains(self, f: Polynomial) -> bool:
        return self.groebner.contains(f)

    __contains__ = contains

    def contains_ideal(self, other: "HomogeneousIdeal") -> bool:
        return all(self.contains(g) for g in other.generators)

    def max_generator_degree(self) -> int:
        return max((g.degree() for g in self.generators), default=0)

    def __eq__(self, other):
        if not isinstance(other, HomogeneousIdeal):
            return NotImplemented
        return self.ring == other.ring and self.groebner == other.groebner

    def __hash__(self):
        return hash(self.groebner)

    def __add__(self, other):
        return ideal_sum(self, other)

    def __mul__(self, other):
        return product(self, other)

    def __and__(self, other):
        return intersect(self, other)

    def __repr__(self):
        return f"HomogeneousIdeal({', '.join(map(str, self.generators)) or '0'})"

    def __str__(self):
        return "(" + ", ".join(map(str, self.generators)) + ")"


def zero_ideal(ring: Ring) -> HomogeneousIdeal:
    return HomogeneousIdeal(ring, (), GroebnerBasis(ring, (), True))


def unit_ideal(ring: Ring) -> HomogeneousIdeal:
    one = ring.one()
    return HomogeneousIdeal(ring, (one,), GroebnerBasis(ring, (one,), True))


def irrelevant_ideal(ring: Ring) -> HomogeneousIdeal:
    """The ideal of all positive-degree forms."""
    return HomogeneousIdeal(ring, ring.gens())


def principal(f: Polynomial) -> HomogeneousIdeal:
    return HomogeneousIdeal(f.ring, (f,))


def power(I: HomogeneousIdeal, e: int) -> HomogeneousIdeal:
    out = unit_ideal(I.ring)
    for _ in range(e):
        out = product(out, I)
    return out


def _same_ring(I: HomogeneousIdeal, J: HomogeneousIdeal):
    if I.ring != J.ring:
        raise RingMismatch("ideals live in different rings")


def ideal_sum(I: HomogeneousIdeal, J: HomogeneousIdeal) -> HomogeneousIdeal:
    _same_ring(I, J)
    return HomogeneousIdeal(I.ring, I.generators + J.generators)


def product(I: HomogeneousIdeal, J: HomogeneousIdeal) -> HomogeneousIdeal:
    _same_ring(I, J)
    return HomogeneousIdeal(I.ring, [f * g for f in I.generators for g in J.generators])


def _elimination_ring(ring: Ring) -> Ring:
    return Ring(ring.nvars + 1, ring.field, MonomialOrder("elim", 1),
                names=("t",) + ring.names, weights=(0,) + ring.weights)


def intersect(I: HomogeneousIdeal, J: HomogeneousIdeal) -> HomogeneousIdeal:
    """``I`` intersected with ``J``: eliminate ``t`` from ``t*I + (1-t)*J``."""
    _same_ring(I, J)
    ring = I.ring
    if I.is_zero() or J.is_zero():
        return zero_ideal(ring)
    if I.is_unit():
        return J
    if J.is_unit():
        return I
    aux = _elimination_ring(ring)
    shift = list(range(1, ring.nvars + 1))
    t = aux.var(0)
    one_minus_t = aux.one() - t
    src_i = I._gb.generators if I._gb is not None else I.generators
    src_j = J._gb.generators if J._gb is not None else J.generators
    gens = [t * remap_variables(f, aux, shift) for f in src_i]
    gens += [one_minus_t * remap_variables(g, aux, shift) for g in src_j]
    G = buchberger(gens, aux, DEFAULT_DEGREE_CAP)
    back = [0] + list(range(ring.nvars))
    kept = [remap_variables(g, ring, back) for g in G.generators if aux.key_exponent(g.lead_key, 0) == 0]
    if ring.order == GREVLEX:
        # the t-free part of a reduced block-order basis is a reduced basis for the second block
        kept.sort(key=lambda g: (g.degree(), -g.lead_key))
        return HomogeneousIdeal(ring, kept, GroebnerBasis(ring, kept, True))
    return HomogeneousIdeal(ring, kept)


def intersect_all(ideals: Sequence[HomogeneousIdeal]) -> HomogeneousIdeal:
    """Left fold of :func:`intersect` in input order."""
    if not ideals:
        raise ValueError("need at least one ideal")
    return functools.reduce(intersect, ideals)


def quotient_by_form(I: HomogeneousIdeal, f: Polynomial) -> HomogeneousIdeal:
    """The colon ideal ``(I : f)``, from ``I`` intersected with ``(f)`` divided by ``f``."""
    if f.ring != I.ring:
        raise RingMismatch("ring mismatch")
    if not f:
        raise ZeroDivisionError("colon by the zero polynomial")
    if not f.is_homogeneous():
        raise ValueError("f must be homogeneous")
    if I.is_unit() or I.is_zero():
        return I
    K = intersect(I, principal(f))
    gens = []
    for g in K.generators:
        (q,), r = divide(g, [f])
        if r:
            raise ArithmeticError("intersection element not divisible by f")
        gens.append(q)
    return HomogeneousIdeal(I.ring, gens)


def saturation_step(J: HomogeneousIdeal) -> HomogeneousIdeal:
    """``(J : m)`` as the intersection of the colons by each variable."""
    parts = []
    for x in J.ring.gens():
        Q = quotient_by_form(J, x)
        if Q.is_unit():
            continue
        parts.append(Q)
    if not parts:
        return unit_ideal(J.ring)
    return intersect_all(parts)


def saturate(I: HomogeneousIdeal) -> HomogeneousIdeal:
    """``I : m^infinity``, iterating ``J -> (J : m)`` until it stabilises."""
    if I.is_zero() or I.is_unit():
        return I
    J = I
    while True:
        K = saturation_step(J)
        if K == J:
            return J
        J = K
        if J.is_unit():
            return J


@functools.lru_cache(maxsize=256)
def _monomials_of_degree(nvars: int, degree: int) -> np.ndarray:
    """All exponent vectors of the given degree, one per row."""
    rows = []
    for bars in itertools.combinations(range(degree + nvars - 1), nvars - 1):
        prev = -1
        exps = []
        for b in bars:
            exps.append(b - prev - 1)
            prev = b
        exps.append(degree + nvars - 2 - prev)
        rows.append(exps)
    arr = np.array(rows, dtype=np.int16).reshape(-1, nvars)
    arr.setflags(write=False)
    return arr


def count_monomials(nvars: int, degree: int) -> int:
    from math import comb
    return comb(degree + nvars - 1, nvars - 1) if degree >= 0 else 0


def hilbert_function(I: HomogeneousIdeal, j: int) -> int:
    """``dim_k I_j``: degree-``j`` monomials in the initial ideal."""
    if j < 0:
        raise ValueError("degree must be nonnegative")
    ring = I.ring
    if any(w != 1 for w in ring.weights):
        raise ValueError("hilbert_function needs the standard grading")
    gb = I.groebner
    if gb.is_zero():
        return 0
    if gb.is_unit():
        return count_monomials(ring.nvars, j)
    leads = np.array([m for m in gb.lead_monomials() if sum(m) <= j], dtype=np.int16)
    if leads.size == 0:
        return 0
    mons = _monomials_of_degree(ring.nvars, j)
    hit = np.zeros(len(mons), dtype=bool)
    for lead in leads:
        hit |= np.all(mons >= lead, axis=1)
    return int(hit.sum())


def saturation_degree(I: HomogeneousIdeal, saturation: HomogeneousIdeal | None = None,
                      regularity: int | None = None, unit_convention: bool = False) -> int:
    """Least ``k`` such that ``I`` and its saturation agree in all degrees ``>= k``.

    A saturated ideal gives 0.  When the saturation is the unit ideal the
    value is only defined under ``unit_convention``: then it is the least
    ``k`` with ``I_k = S_k``.  ``regularity`` (of ``I``), when known, is used
    as an extra consistency bound.
    """
    ring = I.ring
    if I.is_unit():
        if not unit_convention:
            raise SaturationError("saturation degree undefined for unit ideal")
        return 0
    if I.is_zero():
        return 0
    sat = saturation if saturation is not None else saturate(I)
    if sat.is_unit():
        if not unit_convention:
            raise SaturationError("saturation degree undefined for unit ideal")
        k = 0
        while hilbert_function(I, k) != count_monomials(ring.nvars, k):
            k += 1
            if k > 2 * DEFAULT_DEGREE_CAP:
                raise ArithmeticError("m-primary ideal does not fill S_k; not m-primary?")
        return k
    # once j reaches the generator degrees of the saturation, agreement in
    # degree j propagates to every higher degree
    g0 = max((g.degree() for g in sat.groebner.generators), default=0)
    j = g0
    while hilbert_function(I, j) != hilbert_function(sat, j):
        j += 1
        if j > 2 * DEFAULT_DEGREE_CAP:
            raise ArithmeticError("saturation degree search did not terminate")
    if j > g0:
        k = j
    else:
        k = 0
        for i in range(g0 - 1, -1, -1):
            if hilbert_function(I, i) != hilbert_function(sat, i):
                k = i + 1
                break
    bound = 1 + max(I.max_generator_degree(), g0, k, regularity if regularity is not None else 0)
    for i in (bound, bound + 1):
        if hilbert_function(I, i) != hilbert_function(sat, i):
            raise ArithmeticError(f"saturation guard failed in degree {i}")
    return k


def is_nonzerodivisor(x: Polynomial, I: HomogeneousIdeal) -> bool:
    """Is the linear form ``x`` a nonzerodivisor on ``S/I``, i.e. ``(I : x) = I``?"""
    if x.ring != I.ring:
        raise RingMismatch("ring mismatch")
    if not x or not x.is_linear_form():
        raise ValueError("x must be a nonzero linear form")
    if I.is_unit():
        raise ValueError("I must be proper")
    return quotient_by_form(I, x) == I


def avoids_all(x: Polynomial, primes: Sequence[HomogeneousIdeal]) -> bool:
    """Nonzerodivisor test modulo an intersection of primes: ``x`` lies in none of them."""
    return all(not P.contains(x) for P in primes)


def generic_linear_form(ring: Ring, avoid: Sequence[HomogeneousIdeal] = (), seed: int = 0,
                        max_tries: int = 100, tally: MutableMapping[str, int] | None = None) -> Polynomial:
    """A random linear form outside every ideal in ``avoid``; deterministic in ``seed``.

    Rejected draws are counted under ``"genericity_retries"`` in ``tally``.
    """
    # a separate stream, so equal seeds here and in random_arrangement don't correlate
    rng = random.Random(f"linear-form:{seed}")
    fld = ring.field
    for attempt in range(max_tries):
        x = ring.linear_form([fld.random(rng) for _ in range(ring.nvars)])
        if x and not any(J.contains(x) for J in avoid):
            if attempt:
                log.info("generic linear form needed %d retries (seed %d)", attempt, seed)
                if tally is not None:
                    tally["genericity_retries"] = tally.get("genericity_retries", 0) + attempt
            return x
    if tally is not None:
        tally["genericity_retries"] = tally.get("genericity_retries", 0) + max_tries
    raise GenericityFailure(f"genericity failure after {max_tries} draws (seed {seed})")


def section_ring(ring: Ring) -> Ring:
    if ring.nvars < 2:
        raise ValueError("cannot cut a one-variable ring by a hyperplane")
    order = ring.order if ring.order.kind != "elim" else GREVLEX
    return Ring(ring.nvars - 1, ring.field, order)


def hyperplane_section(I: HomogeneousIdeal, x: Polynomial) -> HomogeneousIdeal:
    """Image of ``I + (x)`` in ``S/(x)``, a polynomial ring with one variable fewer.

    The last variable with a nonzero coefficient in ``x`` is solved for; the
    remaining variables keep their order.
    """
    if x.ring != I.ring:
        raise RingMismatch("ring mismatch")
    if not x or not x.is_linear_form():
        raise ValueError("x must be a nonzero linear form")
    ring = I.ring
    fld = ring.field
    coeffs = x.linear_coefficients()
    k = max(i for i, c in enumerate(coeffs) if c)
    T = section_ring(ring)
    pos = [i if i < k else i - 1 for i in range(ring.nvars)]
    images = []
    scale = fld.neg(fld.inv(coeffs[k]))
    solved = T.zero()
    for i, c in enumerate(coeffs):
        if i != k and c:
            solved = solved + T.var(pos[i]).scale(fld.mul(scale, c))
    for i in range(ring.nvars):
        images.append(solved if i == k else T.var(pos[i]))
    return HomogeneousIdeal(T, [substitute_linear(g, images) for g in I.generators])


def height_linear(L: HomogeneousIdeal) -> int:
    """Height of an ideal generated by linear forms: the rank of their coefficients."""
    rows = []
    for g in L.generators:
        if not g.is_linear_form():
            raise ValueError("not a linear ideal")
        rows.append(g.linear_coefficients())
    return rank(rows, L.ring.field)
