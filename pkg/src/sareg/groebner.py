"""Division, Buchberger's algorithm and reduced Groebner bases.

Inputs must be homogeneous for the ring's grading; pairs are then processed
in increasing degree (normal strategy), so the computation runs degree by
degree.  Useless pairs are discarded with the Gebauer-Moeller update, which
implements both the coprime-leading-term and the chain criteria.
"""

from __future__ import annotations

import logging
from typing import Sequence

from .polynomial import Polynomial, Ring, RingMismatch

log = logging.getLogger(__name__)

DEFAULT_DEGREE_CAP = 40


class DegreeCapExceeded(RuntimeError):
    """An S-pair above the configured degree cap was needed."""


class NotHomogeneous(ValueError):
    pass


def _table(polys: Sequence[Polynomial]) -> list:
    """Reducer table: (lead key, uncomplemented lead, tail terms) per monic poly."""
    out = []
    for g in polys:
        V = g.ring.V
        out.append((g._terms[0][0], g._terms[0][0] ^ V, g._terms[1:]))
    return out


def _nf(ring: Ring, f: dict, table: list) -> dict:
    """Fully reduce ``f`` (a key->coeff dict, consumed) by monic reducers."""
    V, G, p = ring.V, ring.G, ring.modulus
    rem = {}
    get = f.get
    while f:
        k = max(f)
        c = f.pop(k)
        m = (k ^ V) | G
        for lk, lm, tail in table:
            if (m - lm) & G == G:
                shift = k - lk
                if p:
                    for tk, tc in tail:
                        nk = tk + shift
                        v = (get(nk, 0) - c * tc) % p
                        if v:
                            f[nk] = v
                        elif nk in f:
                            del f[nk]
                else:
                    for tk, tc in tail:
                        nk = tk + shift
                        v = get(nk, 0) - c * tc
                        if v:
                            f[nk] = v
                        elif nk in f:
                            del f[nk]
                break
        else:
            rem[k] = c
    return rem


class GroebnerBasis:
    """A Groebner basis of a homogeneous ideal under ``ring.order``.

    ``generators`` are monic and, when ``reduced`` is set, sorted by increasing
    degree and decreasing leading monomial.  Two reduced bases of the same ideal compare equal.
    """

    __slots__ = ("ring", "generators", "reduced", "_tab")

    def __init__(self, ring: Ring, generators: Sequence[Polynomial], reduced: bool = True):
        self.ring = ring
        self.generators = tuple(generators)
        self.reduced = reduced
        self._tab = None

    @property
    def table(self) -> list:
        if self._tab is None:
            self._tab = _table([g.monic() for g in self.generators])
        return self._tab

    @property
    def lead_keys(self) -> list[int]:
        return [g.lead_key for g in self.generators]

    def lead_monomials(self):
        return [g.lm for g in self.generators]

    def is_unit(self) -> bool:
        return len(self.generators) == 1 and self.generators[0].is_constant()

    def is_zero(self) -> bool:
        return not self.generators

    def reduce(self, f: Polynomial) -> Polynomial:
        """Normal form of ``f``."""
        if f.ring != self.ring:
            raise RingMismatch("ring mismatch")
        return Polynomial(self.ring, tuple(_nf(self.ring, dict(f._terms), self.table).items()))

    def contains(self, f: Polynomial) -> bool:
        return not self.reduce(f)

    __contains__ = contains

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def __eq__(self, other):
        return (isinstance(other, GroebnerBasis) and self.ring == other.ring
                and self.generators == other.generators)

    def __hash__(self):
        return hash(self.generators)

    def __repr__(self):
        return f"GroebnerBasis([{', '.join(map(str, self.generators))}])"


def divide(f: Polynomial, divisors: Sequence[Polynomial]):
    """Multivariate division: ``f = sum(q_i * divisors[i]) + r``.

    Always uses the first divisor (in list order) whose leading term divides
    the current leading term; the remainder has no term divisible by any
    leading term.
    """
    ring = f.ring
    for g in divisors:
        if g.ring != ring:
            raise RingMismatch("ring mismatch")
        if not g:
            raise ZeroDivisionError("zero polynomial in divisor list")
    fld = ring.field
    V, G, p = ring.V, ring.G, ring.modulus
    leads = [((g._terms[0][0] ^ V), g._terms[0][0], fld.inv(g._terms[0][1]), g._terms) for g in divisors]
    quot = [dict() for _ in divisors]
    rem = {}
    work = dict(f._terms)
    while work:
        k = max(work)
        c = work[k]
        m = (k ^ V) | G
        for i, (lm, lk, linv, terms) in enumerate(leads):
            if (m - lm) & G == G:
                shift = k - lk
                q = c * linv
                if p:
                    q %= p
                quot[i][shift + V] = q
                for tk, tc in terms:
                    nk = tk + shift
                    v = work.get(nk, 0) - q * tc
                    if p:
                        v %= p
                    if v:
                        work[nk] = v
                    else:
                        work.pop(nk, None)
                break
        else:
            rem[k] = work.pop(k)
    return ([Polynomial.from_keys(ring, q) for q in quot], Polynomial.from_keys(ring, rem))


def s_polynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    ring = f.ring
    L = ring.key_lcm(f.lead_key, g.lead_key)
    fld = ring.field
    a = f.mul_term(L - f.lead_key + ring.V, fld.inv(f.lc))
    b = g.mul_term(L - g.lead_key + ring.V, fld.inv(g.lc))
    return a - b


def _check_inputs(gens: Sequence[Polynomial], ring: Ring | None) -> Ring:
    if ring is None:
        if not gens:
            raise ValueError("cannot infer the ring of an empty generator list")
        ring = gens[0].ring
    for g in gens:
        if g.ring != ring:
            raise RingMismatch("ring mismatch")
        if not g.is_homogeneous():
            raise NotHomogeneous("homogeneous input required")
    return ring


def buchberger(gens: Sequence[Polynomial], ring: Ring | None = None,
               degree_cap: int = DEFAULT_DEGREE_CAP) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by ``gens``."""
    ring = _check_inputs(gens, ring)
    V = ring.V
    lcm = ring.key_lcm
    divides = ring.key_divides
    deg = ring.key_degree

    inputs = sorted((g.monic() for g in gens if g), key=lambda g: (g.degree(), g.lead_key))
    polys: list[Polynomial] = []
    leads: list[int] = []
    table: list = []  # reducer table, parallel to polys
    basis: list[int] = []  # indices of current basis elements
    pairs: dict = {}  # (i, j) -> (degree, lcm key)

    def add(h: Polynomial):
        nonlocal basis, pairs
        ih = len(polys)
        polys.append(h)
        leads.append(h.lead_key)
        table.append((h.lead_key, h.lead_key ^ V, h._terms[1:]))
        mh = h.lead_key
        cand = [(ig, lcm(mh, leads[ig])) for ig in basis]
        kept = []
        while cand:
            ig, L = cand.pop()
            if L == mh + leads[ig] - V or (
                    not any(divides(L2, L) for _, L2 in cand)
                    and not any(divides(L2, L) for _, L2 in kept)):
                kept.append((ig, L))
        new_pairs = {}
        for (i, j), (d, L) in pairs.items():
            if (not divides(mh, L) or lcm(leads[i], mh) == L or lcm(leads[j], mh) == L):
                new_pairs[i, j] = (d, L)
        for ig, L in kept:
            if L != mh + leads[ig] - V:
                new_pairs[ig, ih] = (deg(L), L)
        pairs = new_pairs
        basis = [g for g in basis if not divides(mh, leads[g])] + [ih]

    def reduce(terms: dict) -> dict:
        return _nf(ring, terms, [table[i] for i in basis])

    pos = 0
    while pos < len(inputs) or pairs:
        pair = min(pairs, key=pairs.__getitem__) if pairs else None
        pdeg = pairs[pair][0] if pair else None
        if pos < len(inputs) and (pair is None or inputs[pos].degree() <= pdeg):
            r = reduce(dict(inputs[pos]._terms))
            pos += 1
        else:
            if pdeg > degree_cap:
                raise DegreeCapExceeded(f"S-pair of degree {pdeg} exceeds cap {degree_cap}")
            d, L = pairs.pop(pair)
            i, j = pair
            s = dict(polys[i].mul_term(L - leads[i] + V, 1)._terms)
            p = ring.modulus
            for k, c in polys[j].mul_term(L - leads[j] + V, 1)._terms:
                v = s.get(k, 0) - c
                if p:
                    v %= p
                if v:
                    s[k] = v
                else:
                    s.pop(k, None)
            r = reduce(s)
        if r:
            add(Polynomial.from_keys(ring, r).monic())
    return _reduced(ring, [polys[i] for i in basis])


def _reduced(ring: Ring, polys: Sequence[Polynomial]) -> GroebnerBasis:
    """Interreduce a Groebner basis whose leading monomials are pairwise non-dividing."""
    polys = [g.monic() for g in polys]
    tab = _table(polys)
    out = []
    for idx, g in enumerate(polys):
        others = tab[:idx] + tab[idx + 1:]
        tail = _nf(ring, dict(g._terms[1:]), others)
        out.append(Polynomial(ring, ((g._terms[0]),) + tuple(tail.items())))
    out.sort(key=lambda g: (g.degree(), -g.lead_key))
    return GroebnerBasis(ring, out, True)


def minimal_leads(polys: Sequence[Polynomial]) -> list[Polynomial]:
    """Drop polynomials whose leading monomial is divisible by another's."""
    keep = []
    for i, g in enumerate(polys):
        r = g.ring
        if not any(r.key_divides(h.lead_key, g.lead_key) and (h.lead_key != g.lead_key or j < i)
                   for j, h in enumerate(polys) if j != i):
            keep.append(g)
    return keep


def ideal_membership(f: Polynomial, basis: GroebnerBasis) -> bool:
    """Exact membership: the remainder of ``f`` on division by the basis is zero."""
    if f.ring != basis.ring:
        raise RingMismatch("ring mismatch")
    _, r = divide(f, list(basis.generators)) if basis.generators else (None, f)
    return not r


def is_groebner(polys: Sequence[Polynomial]) -> bool:
    """Buchberger's criterion: every S-polynomial reduces to zero."""
    polys = [g for g in polys if g]
    for i in range(len(polys)):
        for j in range(i + 1, len(polys)):
            if divide(s_polynomial(polys[i], polys[j]), polys)[1]:
                return False
    return True


def is_reduced(polys: Sequence[Polynomial]) -> bool:
    for i, g in enumerate(polys):
        if g.lc != g.ring.field.one:
            return False
        for j, h in enumerate(polys):
            if i != j and any(g.ring.key_divides(h.lead_key, k) for k, _ in g._terms):
                return False
    return True
