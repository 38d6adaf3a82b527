"""Graded free resolutions, Betti tables and Castelnuovo-Mumford regularity.

The resolution of an ideal ``I`` (as a module, not ``S/I``) is built from
Schreyer's theorem: the syzygies read off from S-pair reductions of a
Groebner basis are themselves a Groebner basis for the induced (Schreyer)
order, so every level is obtained from the previous one by reductions alone.
The non-minimal result is then cut down by cancelling unit entries.

Module terms are packed like ring monomials: a term ``u * e_a`` of level ``k``
is the integer ``(key(u * T_a) << RB_k) | rank_a`` where ``T_a`` is the total
leading monomial of ``e_a`` and ``rank_a`` its tie-break position.  Integer
order is the Schreyer order, and multiplying by a monomial is an addition.

Regularity is computed two independent ways: from the Betti table, and by the
hyperplane-section recursion ``reg(I) = max(reg(I + (x)), sat(I))`` for a
linear nonzerodivisor ``x`` modulo the saturation.
"""

from __future__ import annotations

import logging
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Mapping, MutableMapping, Sequence

from .groebner import GroebnerBasis
from .ideal import (GenericityFailure, HomogeneousIdeal, generic_linear_form, hilbert_function,
                    hyperplane_section, is_nonzerodivisor, saturate, saturation_degree)
from .polynomial import Polynomial, Ring

log = logging.getLogger(__name__)

DEFAULT_RETRIES = 100


class ResolutionError(ArithmeticError):
    pass


class StrategyMismatch(ArithmeticError):
    """The two regularity algorithms disagreed (an implementation bug)."""

    def __init__(self, betti: int, hyperplane: int, ideal: HomogeneousIdeal):
        super().__init__(f"betti regularity {betti} != hyperplane regularity {hyperplane} for {ideal}")
        self.betti = betti
        self.hyperplane = hyperplane
        self.ideal = ideal


@dataclass(frozen=True)
class FreeModuleSpec:
    """``sum_a S(-degrees[a])``."""

    degrees: tuple = ()

    @property
    def rank(self) -> int:
        return len(self.degrees)


class GradedMatrix:
    """A degree-zero map ``source -> target``, stored as sparse columns.

    ``columns[c]`` maps a row index to a nonzero homogeneous entry of degree
    ``source.degrees[c] - target.degrees[r]``.
    """

    def __init__(self, ring: Ring, source: FreeModuleSpec, target: FreeModuleSpec,
                 columns: Sequence[Mapping[int, Polynomial]]):
        if len(columns) != source.rank:
            raise ValueError("column count does not match the source rank")
        cols = []
        for c, col in enumerate(columns):
            clean = {}
            for r, f in col.items():
                if not 0 <= r < target.rank:
                    raise ValueError(f"row {r} out of range")
                if not f:
                    continue
                if not f.is_homogeneous() or f.degree() != source.degrees[c] - target.degrees[r]:
                    raise ValueError(f"entry ({r}, {c}) has the wrong degree")
                clean[r] = f
            cols.append(clean)
        self.ring = ring
        self.source = source
        self.target = target
        self.columns = cols

    @property
    def shape(self):
        return (self.target.rank, self.source.rank)

    def entry(self, r: int, c: int) -> Polynomial:
        return self.columns[c].get(r, self.ring.zero())

    def rows(self) -> list[list[Polynomial]]:
        return [[self.entry(r, c) for c in range(self.source.rank)] for r in range(self.target.rank)]

    def compose(self, other: "GradedMatrix") -> "GradedMatrix":
        """``self o other``: first ``other``, then ``self``."""
        if other.target != self.source:
            raise ValueError("incompatible maps")
        cols = []
        for col in other.columns:
            acc: dict = {}
            for k, f in col.items():
                for r, g in self.columns[k].items():
                    acc[r] = acc.get(r, self.ring.zero()) + g * f
            cols.append({r: v for r, v in acc.items() if v})
        return GradedMatrix(self.ring, other.source, self.target, cols)

    def is_zero(self) -> bool:
        return not any(self.columns)

    def unit_entries(self) -> list[tuple[int, int]]:
        return [(r, c) for c, col in enumerate(self.columns) for r, f in col.items() if f.is_constant()]

    def __repr__(self):
        return f"GradedMatrix({self.target.rank}x{self.source.rank})"


@dataclass(frozen=True)
class BettiTable:
    """Graded Betti numbers ``beta[i, j]``; absent entries are zero."""

    entries: tuple = ()  # sorted ((i, j), beta) pairs, beta >= 1

    @classmethod
    def from_counts(cls, counts: Mapping[tuple, int]) -> "BettiTable":
        return cls(tuple(sorted((k, v) for k, v in counts.items() if v)))

    def as_dict(self) -> dict:
        return dict(self.entries)

    def __getitem__(self, ij) -> int:
        return self.as_dict().get(tuple(ij), 0)

    @property
    def length(self) -> int:
        return max((i for (i, _), _ in self.entries), default=-1)

    def is_empty(self) -> bool:
        return not self.entries

    def totals(self) -> list[int]:
        out = [0] * (self.length + 1)
        for (i, _), b in self.entries:
            out[i] += b
        return out

    def render(self) -> str:
        """Rows by ``j - i``, columns by ``i``; ``.`` marks a zero."""
        if not self.entries:
            return "(zero)\n"
        d = self.as_dict()
        ncol = self.length + 1
        rows = sorted({j - i for (i, j) in d})
        lo, hi = rows[0], rows[-1]
        labels = ["total:"] + [f"{r}:" for r in range(lo, hi + 1)]
        body = [[str(t) for t in self.totals()]]
        for r in range(lo, hi + 1):
            body.append([str(d[i, i + r]) if (i, i + r) in d else "." for i in range(ncol)])
        width = max(len(s) for row in body for s in row)
        width = max(width, len(str(ncol - 1)))
        lw = max(len(s) for s in labels)
        lines = [" " * lw + "".join(" " + str(i).rjust(width) for i in range(ncol))]
        for lab, row in zip(labels, body):
            lines.append(lab.rjust(lw) + "".join(" " + s.rjust(width) for s in row))
        return "\n".join(lines) + "\n"

    def __str__(self):
        return self.render()


def betti_regularity(table: BettiTable) -> int:
    """``max(j - i)`` over the nonzero Betti numbers."""
    if table.is_empty():
        raise ValueError("empty Betti table")
    return max(j - i for (i, j), _ in table.entries)


# -- Schreyer frames ------------------------------------------------------------------

class _Level:
    """One free module ``F_k`` of the resolution plus the map ``F_k -> F_{k-1}``.

    ``vecs[a]`` is the image of ``e_a``, packed in the encoding of the level
    below; ``lead[a]`` is its leading packed term (coefficient 1).
    """

    __slots__ = ("T", "rank", "comp_of_rank", "degree", "vecs", "lead", "RB")

    def __init__(self, T, degree, vecs, lead, rank_keys):
        n = len(T)
        self.T = T
        self.degree = degree
        self.vecs = vecs
        self.lead = lead
        order = sorted(range(n), key=lambda a: rank_keys[a])
        self.rank = [0] * n
        for pos, a in enumerate(order):
            self.rank[a] = pos
        self.comp_of_rank = order
        self.RB = max(1, n.bit_length())


def _base_level(ring: Ring, degrees: Sequence[int]) -> _Level:
    """The target free module with term-over-position order (earlier rows larger)."""
    n = len(degrees)
    return _Level([ring.V] * n, list(degrees), [None] * n, [None] * n, [-a for a in range(n)])


def _first_level(ring: Ring, base: _Level, columns: Sequence[Mapping[int, Polynomial]]) -> _Level:
    V, p = ring.V, ring.modulus
    vecs, leads, T, deg = [], [], [], []
    for col in columns:
        vec = {}
        for r, f in col.items():
            for k, c in f._terms:
                vec[((k + base.T[r] - V) << base.RB) | base.rank[r]] = c
        lead = max(vec)
        lc = vec[lead]
        if lc != 1:
            inv = ring.field.inv(lc)
            vec = {k: (c * inv % p if p else c * inv) for k, c in vec.items()}
        r = base.comp_of_rank[lead & ((1 << base.RB) - 1)]
        total = lead >> base.RB
        vecs.append(vec)
        leads.append(lead)
        T.append(total)
        deg.append(ring.key_degree(total - base.T[r] + V) + base.degree[r])
    idx = _termination_order(ring, base, leads, T)
    return _Level([T[a] for a in idx], [deg[a] for a in idx], [vecs[a] for a in idx],
                  [leads[a] for a in idx], [(base.rank[_comp(base, leads[a])], -pos) for pos, a in enumerate(idx)])


def _comp(level: _Level, key: int) -> int:
    return level.comp_of_rank[key & ((1 << level.RB) - 1)]


def _termination_order(ring: Ring, below: _Level, leads, totals) -> list[int]:
    """Group by leading component, then lex-descending leading monomial.

    With this ordering each new level of syzygy leading terms loses one more
    variable, which bounds the length of the frame by the number of variables.
    """
    V = ring.V

    def key(a):
        c = _comp(below, leads[a])
        mono = ring.unpack(totals[a] - below.T[c] + V)
        return (c, tuple(-e for e in mono))
    return sorted(range(len(leads)), key=key)


def _next_level(ring: Ring, below: _Level, cur: _Level) -> _Level:
    """Syzygies of the elements of ``cur`` (a Schreyer Groebner basis of the next level)."""
    V, G, p = ring.V, ring.G, ring.modulus
    lcm, divides, kdeg = ring.key_lcm, ring.key_divides, ring.key_degree
    bmask = (1 << below.RB) - 1
    brb = below.RB
    groups = defaultdict(list)
    reducers = defaultdict(list)
    for a in range(len(cur.T)):
        lead = cur.lead[a]
        groups[lead & bmask].append(a)
        reducers[lead & bmask].append(((lead >> brb) ^ V, lead, a, [(k, c) for k, c in cur.vecs[a].items() if k != lead]))
    crb = cur.RB
    new_vecs, new_leads, new_T, new_deg, new_src = [], [], [], [], []
    for r in sorted(groups):
        members = groups[r]
        for pos, i in enumerate(members):
            Ti = cur.T[i]
            cands = []
            for j in members[pos + 1:]:
                L = lcm(Ti, cur.T[j])
                cands.append((L - Ti + V, j, L))
            for idx, (m, j, L) in enumerate(cands):
                if any(divides(m2, m) and (m2 != m or idx2 < idx)
                       for idx2, (m2, _, _) in enumerate(cands) if idx2 != idx):
                    continue
                new_vecs.append(_syzygy(ring, below, cur, reducers, i, j, L, bmask))
                lead = (L << crb) | cur.rank[i]
                new_leads.append(lead)
                new_T.append(L)
                new_deg.append(kdeg(m) + cur.degree[i])
    if not new_vecs:
        return _Level([], [], [], [], [])
    idx = _termination_order(ring, cur, new_leads, new_T)
    rank_keys = [(cur.rank[_comp(cur, new_leads[a])], -pos) for pos, a in enumerate(idx)]
    return _Level([new_T[a] for a in idx], [new_deg[a] for a in idx], [new_vecs[a] for a in idx],
                  [new_leads[a] for a in idx], rank_keys)


def _syzygy(ring, below, cur, reducers, i, j, L, bmask) -> dict:
    """The syzygy ``w_i e_i - w_j e_j - sum(q_l e_l)`` from reducing an S-pair to zero."""
    V, G, p = ring.V, ring.G, ring.modulus
    brb, crb = below.RB, cur.RB
    si = (L - cur.T[i]) << brb
    sj = (L - cur.T[j]) << brb
    f = {k + si: c for k, c in cur.vecs[i].items()}
    get = f.get
    for k, c in cur.vecs[j].items():
        nk = k + sj
        v = get(nk, 0) - c
        if p:
            v %= p
        if v:
            f[nk] = v
        else:
            f.pop(nk, None)
    out = {(L << crb) | cur.rank[i]: 1}
    neg1 = p - 1 if p else -1
    out[(L << crb) | cur.rank[j]] = neg1
    while f:
        k = max(f)
        c = f.pop(k)
        m = ((k >> brb) ^ V) | G
        for lm, lk, l, tail in reducers.get(k & bmask, ()):
            if (m - lm) & G == G:
                shift = k - lk
                qk = (((shift >> brb) + cur.T[l]) << crb) | cur.rank[l]
                v = out.get(qk, 0) - c
                if p:
                    v %= p
                if v:
                    out[qk] = v
                else:
                    out.pop(qk, None)
                for tk, tc in tail:
                    nk = tk + shift
                    v = get(nk, 0) - c * tc
                    if p:
                        v %= p
                    if v:
                        f[nk] = v
                    elif nk in f:
                        del f[nk]
                break
        else:
            raise ResolutionError("S-pair of a Schreyer basis did not reduce to zero")
    return out


def _to_columns(ring: Ring, below: _Level, level: _Level) -> list[dict]:
    V = ring.V
    mask = (1 << below.RB) - 1
    cols = []
    for vec in level.vecs:
        acc: dict = defaultdict(dict)
        for k, c in vec.items():
            r = below.comp_of_rank[k & mask]
            acc[r][(k >> below.RB) - below.T[r] + V] = c
        cols.append({r: Polynomial.from_keys(ring, d) for r, d in acc.items()})
    return cols


@dataclass
class Resolution:
    """``F_L -> ... -> F_0 -> I``; ``maps[0]`` is the augmentation ``F_0 -> S``."""

    ring: Ring
    modules: list = field(default_factory=list)  # FreeModuleSpec per homological degree
    maps: list = field(default_factory=list)  # GradedMatrix: maps[i] : F_i -> F_{i-1}
    minimal: bool = False

    @property
    def length(self) -> int:
        return len(self.modules) - 1

    def betti_table(self) -> BettiTable:
        counts: dict = defaultdict(int)
        for i, F in enumerate(self.modules):
            for d in F.degrees:
                counts[i, d] += 1
        return BettiTable.from_counts(counts)

    def ranks(self) -> list[int]:
        return [F.rank for F in self.modules]


def schreyer_syzygies(basis: GradedMatrix | GroebnerBasis) -> GradedMatrix:
    """Generators of the syzygies among the columns of ``basis``.

    The columns must be a Groebner basis of the submodule they generate for
    the term-over-position order on the target (earlier rows larger); for
    an ideal (one row) this is just a Groebner basis.  The result maps a new
    free module onto the source of ``basis``; ``basis o result == 0``.
    """
    if isinstance(basis, GroebnerBasis):
        ring = basis.ring
        gens = list(basis.generators)
        basis = GradedMatrix(ring, FreeModuleSpec(tuple(g.degree() for g in gens)), FreeModuleSpec((0,)),
                             [{0: g} for g in gens])
    ring = basis.ring
    if basis.source.rank == 0:
        return GradedMatrix(ring, FreeModuleSpec(()), basis.source, [])
    base = _base_level(ring, basis.target.degrees)
    first = _first_level(ring, base, basis.columns)
    # _first_level reorders the basis; translate back to the caller's column order
    order = _termination_order_perm(ring, base, basis.columns)
    nxt = _next_level(ring, base, first)
    cols = _to_columns(ring, first, nxt)
    remapped = [{order[r]: f for r, f in col.items()} for col in cols]
    return GradedMatrix(ring, FreeModuleSpec(tuple(nxt.degree)), basis.source, remapped)


def _termination_order_perm(ring, base, columns) -> list[int]:
    V = ring.V
    leads, T = [], []
    for col in columns:
        best = max(((k + base.T[r] - V) << base.RB) | base.rank[r] for r, f in col.items() for k, _ in f._terms)
        leads.append(best)
        T.append(best >> base.RB)
    return _termination_order(ring, base, leads, T)


def schreyer_resolution(I: HomogeneousIdeal) -> Resolution:
    """A (generally non-minimal) free resolution of ``I`` from its Groebner basis."""
    if I.is_zero() or I.is_unit():
        raise ValueError("resolution needs a proper nonzero ideal")
    ring = I.ring
    gens = list(I.groebner.generators)
    base = _base_level(ring, [0])
    levels = [base, _first_level(ring, base, [{0: g} for g in gens])]
    while True:
        nxt = _next_level(ring, levels[-2], levels[-1])
        if not nxt.T:
            break
        levels.append(nxt)
        if len(levels) > ring.nvars + 3:
            raise ResolutionError("Schreyer frame longer than the syzygy theorem allows")
    modules, maps = [], []
    target = FreeModuleSpec((0,))
    for k in range(1, len(levels)):
        F = FreeModuleSpec(tuple(levels[k].degree))
        maps.append(GradedMatrix(ring, F, target, _to_columns(ring, levels[k - 1], levels[k])))
        modules.append(F)
        target = F
    return Resolution(ring, modules, maps, minimal=False)


def minimalize(res: Resolution) -> Resolution:
    """Cancel unit entries of the differentials until none remain.

    A unit ``c`` at row ``a`` / column ``b`` of ``d_i`` splits off
    ``S e_b -> S e_a``: clear row ``a`` by column operations, then drop row
    ``a`` and column ``b`` of ``d_i``, column ``a`` of ``d_{i-1}`` and row
    ``b`` of ``d_{i+1}`` (both are zero after the change of basis).
    """
    ring = res.ring
    fld = ring.field
    degs = [list(F.degrees) for F in res.modules]
    cols = [[dict(c) for c in M.columns] for M in res.maps]
    alive = [[True] * len(d) for d in degs]
    for i in range(1, len(cols)):
        while True:
            pivot = _find_unit(cols[i], alive[i], alive[i - 1], degs[i], degs[i - 1])
            if pivot is None:
                break
            a, b = pivot
            colb = cols[i][b]
            inv = fld.inv(colb[a].lc)
            for bp, col in enumerate(cols[i]):
                if bp == b or not alive[i][bp] or a not in col:
                    continue
                factor = col[a].scale(inv)
                for r, f in colb.items():
                    v = col.get(r, ring.zero()) - f * factor
                    if v:
                        col[r] = v
                    else:
                        col.pop(r, None)
                col.pop(a, None)
            alive[i][b] = False
            alive[i - 1][a] = False
            cols[i][b] = {}
            for col in cols[i]:
                col.pop(a, None)
            if i + 1 < len(cols):
                for col in cols[i + 1]:
                    col.pop(b, None)
            cols[i - 1][a] = {}
    modules, maps = [], []
    prev_index = {0: 0}
    target = FreeModuleSpec((0,))
    for i, d in enumerate(degs):
        keep = [a for a in range(len(d)) if alive[i][a]]
        if not keep:
            break
        index = {a: n for n, a in enumerate(keep)}
        F = FreeModuleSpec(tuple(d[a] for a in keep))
        newcols = [{prev_index[r]: f for r, f in cols[i][a].items()} for a in keep]
        maps.append(GradedMatrix(ring, F, target, newcols))
        modules.append(F)
        target = F
        prev_index = index
    return Resolution(ring, modules, maps, minimal=True)


def _find_unit(cols, alive_src, alive_tgt, deg_src, deg_tgt):
    best = None
    for b, col in enumerate(cols):
        if not alive_src[b]:
            continue
        for a, f in col.items():
            if alive_tgt[a] and deg_src[b] == deg_tgt[a]:
                # prefer the sparsest column to limit fill-in
                if best is None or len(col) < best[0]:
                    best = (len(col), a, b)
                break
    return None if best is None else (best[1], best[2])


def resolve(I: HomogeneousIdeal, minimize: bool = True) -> Resolution:
    res = schreyer_resolution(I)
    return minimalize(res) if minimize else res


def minimal_resolution(I: HomogeneousIdeal) -> BettiTable:
    """Betti table of the minimal graded free resolution of ``I``."""
    return resolve(I).betti_table()


# -- hyperplane recursion -------------------------------------------------------------

def _nonzerodivisor_mod(sat: HomogeneousIdeal, seed: int, tally, max_tries: int) -> Polynomial:
    """A linear form that is a nonzerodivisor modulo the saturated ideal ``sat``."""
    for attempt in range(max_tries):
        x = generic_linear_form(sat.ring, [sat], seed=seed * 7919 + attempt, max_tries=max_tries, tally=tally)
        if is_nonzerodivisor(x, sat):
            return x
        log.info("linear form %s is a zerodivisor modulo the saturation; redrawing", x)
        if tally is not None:
            tally["genericity_retries"] = tally.get("genericity_retries", 0) + 1
    raise GenericityFailure("no linear nonzerodivisor found")


def hyperplane_regularity(I: HomogeneousIdeal, seed: int = 0, tally: MutableMapping[str, int] | None = None,
                          max_tries: int = DEFAULT_RETRIES) -> int:
    """Regularity of ``I`` via ``reg(I) = max(reg(I + (x)), sat(I))``.

    Each step passes to a hyperplane section in one variable fewer; an ideal
    of a one-variable ring is ``(x^e)`` with regularity ``e``, and an ideal
    whose saturation is the unit ideal has regularity equal to its
    saturation degree.
    """
    if I.is_zero() or I.is_unit():
        raise ValueError("regularity needs a proper nonzero ideal")
    ring = I.ring
    if ring.nvars == 1:
        return I.groebner.generators[0].degree()
    sat = saturate(I)
    if sat.is_unit():
        return saturation_degree(I, sat, unit_convention=True)
    s = saturation_degree(I, sat)
    x = _nonzerodivisor_mod(sat, seed, tally, max_tries)
    section = hyperplane_section(I, x)
    return max(hyperplane_regularity(section, seed + 1, tally, max_tries), s)


@dataclass(frozen=True)
class RegularityResult:
    value: int
    betti: int | None = None
    hyperplane: int | None = None

    @property
    def agree(self) -> bool:
        return self.betti is None or self.hyperplane is None or self.betti == self.hyperplane


def regularity(I: HomogeneousIdeal, strategy: str = "betti", seed: int = 0,
               tally: MutableMapping[str, int] | None = None) -> RegularityResult:
    """Regularity of ``I`` by ``strategy`` in {"betti", "hyperplane", "both"}.

    ``both`` runs the two algorithms and raises :class:`StrategyMismatch` if
    they disagree.
    """
    if strategy not in ("betti", "hyperplane", "both"):
        raise ValueError(f"unknown strategy {strategy!r}")
    if I.is_zero() or I.is_unit():
        raise ValueError("regularity needs a proper nonzero ideal")
    b = h = None
    if strategy in ("betti", "both"):
        b = betti_regularity(minimal_resolution(I))
    if strategy in ("hyperplane", "both"):
        h = hyperplane_regularity(I, seed, tally)
    if b is not None and h is not None and b != h:
        raise StrategyMismatch(b, h, I)
    return RegularityResult(b if b is not None else h, b, h)


__all__ = [
    "BettiTable", "FreeModuleSpec", "GradedMatrix", "RegularityResult", "Resolution", "ResolutionError",
    "StrategyMismatch", "betti_regularity", "hilbert_function", "hyperplane_regularity", "minimal_resolution",
    "minimalize", "regularity", "resolve", "schreyer_resolution", "schreyer_syzygies",
]
