"""Linear subspace arrangements in projective space and their ideals."""

from __future__ import annotations

import functools
import logging
import random
from dataclasses import dataclass
from typing import Sequence

from .field import Field, field_from_spec
from .ideal import HomogeneousIdeal, intersect, product
from .linalg import nullspace, rank, rref
from .polynomial import Polynomial, Ring

log = logging.getLogger(__name__)

MAX_DRAWS = 100


class ArrangementError(ValueError):
    pass


class Subspace:
    """A proper nonempty linear subspace of ``P^n``, cut out by independent linear forms."""

    def __init__(self, ring: Ring, forms: Sequence[Polynomial]):
        forms = list(forms)
        n = ring.nvars - 1
        for f in forms:
            if f.ring != ring:
                raise ArrangementError("form from another ring")
            if not f or not f.is_linear_form():
                raise ArrangementError("subspace forms must be nonzero linear forms")
        if not 1 <= len(forms) <= n:
            raise ArrangementError(f"codimension {len(forms)} outside 1..{n}")
        if rank([f.linear_coefficients() for f in forms], ring.field) != len(forms):
            raise ArrangementError("subspace forms are linearly dependent")
        self.ring = ring
        self.forms = tuple(forms)

    @property
    def codim(self) -> int:
        return len(self.forms)

    def row_space(self) -> tuple:
        """Canonical form of the span of the defining forms."""
        red, _ = rref([f.linear_coefficients() for f in self.forms], self.ring.field)
        return tuple(tuple(r) for r in red)

    def contains_point(self, point: Sequence) -> bool:
        fld = self.ring.field
        return all(sum(fld.mul(c, fld(x)) for c, x in zip(f.linear_coefficients(), point)) % (fld.modulus or 1) == 0
                   if fld.modulus else sum(c * x for c, x in zip(f.linear_coefficients(), point)) == 0
                   for f in self.forms)

    def __eq__(self, other):
        return isinstance(other, Subspace) and self.ring == other.ring and self.row_space() == other.row_space()

    def __hash__(self):
        return hash(self.row_space())

    def __repr__(self):
        return "Subspace(" + "; ".join(map(str, self.forms)) + ")"


class Arrangement:
    """A finite set of distinct subspaces of one projective space."""

    def __init__(self, ring: Ring, subspaces: Sequence[Subspace]):
        subspaces = list(subspaces)
        if not subspaces:
            raise ArrangementError("an arrangement needs at least one subspace")
        seen = set()
        for V in subspaces:
            if V.ring != ring:
                raise ArrangementError("subspace from another ring")
            rs = V.row_space()
            if rs in seen:
                raise ArrangementError("duplicate subspace")
            seen.add(rs)
        self.ring = ring
        self.subspaces = tuple(subspaces)

    @property
    def d(self) -> int:
        return len(self.subspaces)

    @property
    def n(self) -> int:
        return self.ring.nvars - 1

    @property
    def codims(self) -> list[int]:
        return [V.codim for V in self.subspaces]

    def __len__(self):
        return len(self.subspaces)

    def __iter__(self):
        return iter(self.subspaces)

    def __repr__(self):
        return f"Arrangement(n={self.n}, d={self.d}, codims={self.codims})"


def subspace_ideal(V: Subspace) -> HomogeneousIdeal:
    return HomogeneousIdeal(V.ring, V.forms)


def arrangement_ideal(X: Arrangement) -> HomogeneousIdeal:
    """Intersection of the subspace ideals, folded left to right."""
    return functools.reduce(intersect, [subspace_ideal(V) for V in X.subspaces])


def product_ideal(X: Arrangement) -> HomogeneousIdeal:
    return functools.reduce(product, [subspace_ideal(V) for V in X.subspaces])


def _random_subspace(ring: Ring, codim: int, rng: random.Random) -> Subspace:
    fld = ring.field
    for _ in range(MAX_DRAWS):
        rows = [[fld.random(rng) for _ in range(ring.nvars)] for _ in range(codim)]
        if rank(rows, fld) == codim:
            return Subspace(ring, [ring.linear_form(r) for r in rows])
    raise ArrangementError("could not draw independent forms")


def random_arrangement(n: int, d: int, codims: Sequence[int], seed: int,
                       field: Field | str | int | None = None) -> Arrangement:
    """``d`` random subspaces of ``P^n`` with the given codimensions; deterministic in ``seed``."""
    if d < 1 or len(codims) != d:
        raise ArrangementError("need d >= 1 and one codimension per subspace")
    if any(not 1 <= c <= n for c in codims):
        raise ArrangementError(f"codimensions must lie in 1..{n}")
    fld = field if hasattr(field, "modulus") else field_from_spec(field)
    ring = Ring(n + 1, fld)
    rng = random.Random(seed)
    subs: list[Subspace] = []
    seen = set()
    for c in codims:
        for _ in range(MAX_DRAWS):
            V = _random_subspace(ring, c, rng)
            if V.row_space() not in seen:
                break
        else:
            raise ArrangementError("could not draw distinct subspaces")
        seen.add(V.row_space())
        subs.append(V)
    return Arrangement(ring, subs)


def auxiliary_line(ring: Ring) -> Subspace:
    """The line ``x2 = x3 = 0`` of ``P^3`` used by :func:`sharp_example`."""
    return Subspace(ring, [ring.var(2), ring.var(3)])


def line_through(ring: Ring, p: Sequence, q: Sequence) -> Subspace:
    """The line of ``P^3`` spanned by two distinct points."""
    fld = ring.field
    forms = nullspace([list(p), list(q)], ring.nvars, fld)
    if len(forms) != ring.nvars - 2:
        raise ArrangementError("points do not span a line")
    return Subspace(ring, [ring.linear_form(f) for f in forms])


def sharp_example(d: int, seed: int = 0, field: Field | str | int | None = None) -> Arrangement:
    """``d`` general lines of ``P^3`` meeting the line ``x2 = x3 = 0`` in ``d`` distinct points.

    Line ``k`` passes through ``[1 : k : 0 : 0]`` in a random direction;
    directions are redrawn when a line lies on the auxiliary line, meets
    another line of the arrangement, or repeats one.
    """
    if d < 2:
        raise ArrangementError("the sharp example needs d >= 2")
    fld = field if hasattr(field, "modulus") else field_from_spec(field)
    if fld.modulus and d > fld.modulus - 1:
        raise ArrangementError("not enough distinct scalars in the field")
    ring = Ring(4, fld)
    rng = random.Random(seed)
    lines: list[Subspace] = []
    for k in range(1, d + 1):
        p = [fld(1), fld(k), fld(0), fld(0)]
        for attempt in range(MAX_DRAWS):
            q = [fld.random(rng) for _ in range(4)]
            if not (q[2] or q[3]):
                continue  # direction on the auxiliary line
            try:
                V = line_through(ring, p, q)
            except ArrangementError:
                continue
            if all(_skew(V, W) for W in lines):
                if attempt:
                    log.info("sharp example line %d redrawn %d times", k, attempt)
                lines.append(V)
                break
        else:
            raise ArrangementError("could not place a general line")
    return Arrangement(ring, lines)


def _skew(V: Subspace, W: Subspace) -> bool:
    """Two lines of ``P^3`` are disjoint iff their four forms are independent."""
    return rank([f.linear_coefficients() for f in V.forms + W.forms], V.ring.field) == V.ring.nvars
