"""Brute-force linear algebra over F_p, independent of the Groebner and Schreyer code.

Polynomials enter only through ``to_dict()``; everything else is plain
Gaussian elimination on sparse rows keyed by exponent tuples.
"""

from __future__ import annotations

from itertools import combinations, combinations_with_replacement


def monomials(nvars: int, deg: int) -> list[tuple]:
    out = []
    for combo in combinations_with_replacement(range(nvars), deg):
        e = [0] * nvars
        for v in combo:
            e[v] += 1
        out.append(tuple(e))
    return out


def echelon(rows, p: int) -> dict:
    """Sparse echelon form: pivot column -> row with a 1 at the pivot."""
    basis: dict = {}
    for row in rows:
        r = {k: v % p for k, v in row.items() if v % p}
        while r:
            piv = max(r)
            if piv not in basis:
                inv = pow(r[piv], -1, p)
                basis[piv] = {k: v * inv % p for k, v in r.items()}
                break
            c = r[piv]
            for k, v in basis[piv].items():
                nv = (r.get(k, 0) - c * v) % p
                if nv:
                    r[k] = nv
                else:
                    r.pop(k, None)
    return basis


def rank(rows, p: int) -> int:
    return len(echelon(rows, p))


def _mul_mono(e, f):
    return tuple(a + b for a, b in zip(e, f))


def degree_part(gens, nvars: int, deg: int, p: int) -> list[dict]:
    """A basis of ``I_deg`` for ``I = (gens)``, as rows keyed by exponent tuples."""
    span = []
    for g in gens:
        terms = {tuple(m): int(c) for m, c in g.to_dict().items()}
        e = g.degree()
        if e > deg:
            continue
        for m in monomials(nvars, deg - e):
            span.append({_mul_mono(m, k): c for k, c in terms.items()})
    return list(echelon(span, p).values())


def in_ideal(f, gens, nvars: int, p: int) -> bool:
    """Membership of a homogeneous ``f`` by comparing ranks in degree ``deg f``."""
    if not f:
        return True
    rows = degree_part(gens, nvars, f.degree(), p)
    row = {tuple(m): int(c) for m, c in f.to_dict().items()}
    return rank(rows + [row], p) == len(rows)


def koszul_betti(gens, nvars: int, p: int, max_j: int) -> dict:
    """``beta[i, j] = dim Tor_i(I, k)_j`` from the Koszul complex ``I (x) Lambda^i``, for ``j <= max_j``."""
    parts = {}

    def part(e):
        if e < 0:
            return []
        if e not in parts:
            parts[e] = degree_part(gens, nvars, e, p)
        return parts[e]

    def boundary_rank(i, j):
        # d_i : I_{j-i} (x) Lambda^i -> S_{j-i+1} (x) Lambda^{i-1}
        if i <= 0 or i > nvars:
            return 0
        rows = []
        for b in part(j - i):
            for A in combinations(range(nvars), i):
                img: dict = {}
                for pos, a in enumerate(A):
                    sign = -1 if pos % 2 else 1
                    rest = A[:pos] + A[pos + 1:]
                    unit = tuple(1 if v == a else 0 for v in range(nvars))
                    for m, c in b.items():
                        key = (_mul_mono(m, unit), rest)
                        img[key] = (img.get(key, 0) + sign * c) % p
                rows.append(img)
        return rank(rows, p)

    out = {}
    for j in range(max_j + 1):
        for i in range(0, nvars):
            dim = len(part(j - i)) * len(list(combinations(range(nvars), i)))
            if not dim:
                continue
            b = dim - boundary_rank(i, j) - boundary_rank(i + 1, j)
            if b:
                out[i, j] = b
    return out
