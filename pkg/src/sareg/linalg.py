"""Exact Gaussian elimination over a coefficient field."""

from __future__ import annotations

from typing import Sequence

from .field import Field


def rref(rows: Sequence[Sequence], field: Field):
    """Reduced row echelon form; returns ``(nonzero rows, pivot columns)``."""
    m = [[field(x) for x in r] for r in rows]
    pivots = []
    r = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = field.inv(m[r][c])
        m[r] = [field.mul(x, inv) for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [field.sub(a, field.mul(f, b)) for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: Sequence[Sequence], field: Field) -> int:
    return len(rref(rows, field)[1]) if rows else 0


def nullspace(rows: Sequence[Sequence], ncols: int, field: Field) -> list[list]:
    """Basis of ``{v : rows . v = 0}``."""
    red, pivots = rref(rows, field) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [field.zero] * ncols
        v[fc] = field.one
        for row, pc in zip(red, pivots):
            v[pc] = field.neg(row[fc])
        basis.append(v)
    return basis
