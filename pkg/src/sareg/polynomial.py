"""Monomials, monomial orders, graded rings and polynomials.

Monomials are packed into a single integer so that the integer order *is* the
monomial order.  Every order is a sequence of blocks of variables, compared
block by block, each block by grevlex (degree first, then reverse
lexicographic).  grevlex is one block, lex is one block per variable, and the
elimination order used for intersections is two blocks.

Packed layout, most significant field first: for each block, a degree field,
then the block's exponents from its last variable to its first.  Fields are
8 bits wide.  Exponent fields are stored complemented (``127 - e``) so that a
smaller trailing exponent compares larger, which is exactly grevlex inside a
block.  With ``V`` the mask of all exponent fields, the packed key of a
monomial ``M`` (uncomplemented) is ``M ^ V``; then

* product of monomials:   ``k1 + k2 - V``
* quotient ``k1 / k2``:     ``k1 - k2 + V``
* divisibility uses the classic guard-bit subtraction on ``k ^ V``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .field import Field, PrimeField, RationalField, field_from_spec

FIELD_BITS = 8
MAX_EXPONENT = 127  # per variable and per block degree


class RingMismatch(ValueError):
    pass


class Monomial(tuple):
    """An exponent vector ``(e_0, ..., e_n)``."""

    __slots__ = ()

    def __new__(cls, exponents: Iterable[int]):
        exps = tuple(int(e) for e in exponents)
        if any(e < 0 for e in exps):
            raise ValueError("negative exponent")
        return super().__new__(cls, exps)

    @property
    def exponents(self) -> tuple:
        return tuple(self)

    @property
    def total_degree(self) -> int:
        return sum(self)

    def __mul__(self, other):
        if len(other) != len(self):
            raise ValueError("variable count mismatch")
        return Monomial(a + b for a, b in zip(self, other))

    def divides(self, other) -> bool:
        return all(a <= b for a, b in zip(self, other))

    def __repr__(self):
        return f"Monomial({tuple(self)})"


@dataclass(frozen=True)
class MonomialOrder:
    """``kind`` is ``"grevlex"``, ``"lex"`` or ``"elim"``.

    ``elim`` with ``block=k`` compares the first ``k`` variables first (by
    grevlex) and breaks ties by grevlex on the rest.
    """

    kind: str = "grevlex"
    block: int = 0

    def __post_init__(self):
        if self.kind not in ("grevlex", "lex", "elim"):
            raise ValueError(f"unknown monomial order {self.kind!r}")
        if self.kind == "elim" and self.block < 1:
            raise ValueError("elimination order needs block >= 1")

    def blocks(self, nvars: int) -> list[list[int]]:
        if self.kind == "grevlex":
            return [list(range(nvars))]
        if self.kind == "lex":
            return [[i] for i in range(nvars)]
        if self.block >= nvars:
            raise ValueError("elimination block must leave at least one variable")
        return [list(range(self.block)), list(range(self.block, nvars))]

    def key(self, exponents: Sequence[int]) -> tuple:
        """Comparison key on plain exponent tuples (bigger key = bigger monomial)."""
        out = []
        for blk in self.blocks(len(exponents)):
            es = [exponents[i] for i in blk]
            out.append(sum(es))
            out.extend(-e for e in reversed(es))
        return tuple(out)

    def __str__(self):
        return f"elim({self.block})" if self.kind == "elim" else self.kind


GREVLEX = MonomialOrder("grevlex")
LEX = MonomialOrder("lex")


def monomial_compare(m1: Sequence[int], m2: Sequence[int], order: MonomialOrder = GREVLEX) -> int:
    """Return -1, 0 or 1 as ``m1`` is less than, equal to or greater than ``m2``."""
    if len(m1) != len(m2):
        raise ValueError("variable count mismatch")
    k1, k2 = order.key(m1), order.key(m2)
    return (k1 > k2) - (k1 < k2)


class Ring:
    """The graded ring ``k[x_0, ..., x_{N-1}]`` with a monomial order.

    ``weights`` gives the grading; it defaults to the standard grading.  Rings
    compare equal when all of their data agree.
    """

    def __init__(self, nvars: int, field: Field | str | int | None = None,
                 order: MonomialOrder = GREVLEX, names: Sequence[str] | None = None,
                 weights: Sequence[int] | None = None):
        if nvars < 1:
            raise ValueError("a ring needs at least one variable")
        self.nvars = nvars
        self.field = field if isinstance(field, (PrimeField, RationalField)) else field_from_spec(field)
        self.order = order
        self.names = tuple(names) if names is not None else tuple(f"x{i}" for i in range(nvars))
        if len(self.names) != nvars:
            raise ValueError("wrong number of variable names")
        self.weights = tuple(weights) if weights is not None else (1,) * nvars
        if len(self.weights) != nvars or any(w < 0 for w in self.weights):
            raise ValueError("bad weights")
        self.modulus = self.field.modulus

        blocks = order.blocks(nvars)
        layout = []  # ('deg', b) or ('var', i), most significant first
        for b, blk in enumerate(blocks):
            layout.append(("deg", b))
            layout.extend(("var", i) for i in reversed(blk))
        nfields = len(layout)
        self._var_shift = [0] * nvars
        self._deg_shift = [0] * len(blocks)
        for pos, (kind, idx) in enumerate(layout):
            shift = FIELD_BITS * (nfields - 1 - pos)
            if kind == "deg":
                self._deg_shift[idx] = shift
            else:
                self._var_shift[idx] = shift
        self._blocks = blocks
        self._block_of = [0] * nvars
        for b, blk in enumerate(blocks):
            for i in blk:
                self._block_of[i] = b
        self.V = sum(MAX_EXPONENT << s for s in self._var_shift)
        self.G = sum(128 << (FIELD_BITS * f) for f in range(nfields))
        self.one_key = self.V
        # fast weighted degree when weights are constant on blocks
        self._block_weights = []
        for blk in blocks:
            ws = {self.weights[i] for i in blk}
            self._block_weights.append(ws.pop() if len(ws) == 1 else None)
        self._uniform = all(w is not None for w in self._block_weights)
        self._deg_fields = [(self._deg_shift[b], w) for b, w in enumerate(self._block_weights)]
        self._key = (nvars, self.field, order, self.names, self.weights)
        self._hash = hash(self._key)

    # -- identity ---------------------------------------------------------
    def __eq__(self, other):
        return self is other or (isinstance(other, Ring) and self._key == other._key)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Ring({self.nvars}, field={self.field}, order={self.order})"

    def __reduce__(self):
        names = None if self.names == tuple(f"x{i}" for i in range(self.nvars)) else self.names
        return (Ring, (self.nvars, self.field, self.order, names, self.weights))

    def with_order(self, order: MonomialOrder) -> "Ring":
        return Ring(self.nvars, self.field, order, self.names, self.weights)

    # -- packed monomials ---------------------------------------------------
    def pack(self, exps: Sequence[int]) -> int:
        if len(exps) != self.nvars:
            raise ValueError(f"expected {self.nvars} exponents, got {len(exps)}")
        m = 0
        bdeg = [0] * len(self._blocks)
        for i, e in enumerate(exps):
            if e < 0 or e > MAX_EXPONENT:
                raise OverflowError(f"exponent {e} out of range")
            m |= e << self._var_shift[i]
            bdeg[self._block_of[i]] += e
        for b, d in enumerate(bdeg):
            if d > MAX_EXPONENT:
                raise OverflowError("monomial degree too large")
            m |= d << self._deg_shift[b]
        return m ^ self.V

    def unpack(self, key: int) -> Monomial:
        m = key ^ self.V
        return Monomial((m >> s) & MAX_EXPONENT for s in self._var_shift)

    def key_degree(self, key: int) -> int:
        """Weighted degree of a packed monomial."""
        if self._uniform:
            return sum(w * ((key >> s) & 255) for s, w in self._deg_fields)
        return sum(w * e for w, e in zip(self.weights, self.unpack(key)))

    def key_total_degree(self, key: int) -> int:
        return sum((key >> s) & 255 for s in self._deg_shift)

    def key_divides(self, a: int, b: int) -> bool:
        """Does monomial ``a`` divide monomial ``b``?"""
        G = self.G
        return (((b ^ self.V) | G) - (a ^ self.V)) & G == G

    def key_lcm(self, a: int, b: int) -> int:
        return self.pack([max(x, y) for x, y in zip(self.unpack(a), self.unpack(b))])

    def key_exponent(self, key: int, i: int) -> int:
        return ((key ^ self.V) >> self._var_shift[i]) & MAX_EXPONENT

    # -- constructors -------------------------------------------------------
    def zero(self) -> "Polynomial":
        return Polynomial(self, ())

    def one(self) -> "Polynomial":
        return self.const(1)

    def const(self, c) -> "Polynomial":
        c = self.field(c)
        return Polynomial(self, ((self.V, c),) if c else ())

    def var(self, i: int) -> "Polynomial":
        exps = [0] * self.nvars
        exps[i] = 1
        return Polynomial(self, ((self.pack(exps), self.field.one),))

    def gens(self) -> list["Polynomial"]:
        return [self.var(i) for i in range(self.nvars)]

    def monomial(self, exps: Sequence[int], coeff=1) -> "Polynomial":
        c = self.field(coeff)
        return Polynomial(self, ((self.pack(exps), c),) if c else ())

    def from_dict(self, data: Mapping[Sequence[int], object]) -> "Polynomial":
        d = {}
        for exps, c in data.items():
            c = self.field(c)
            if c:
                k = self.pack(exps)
                d[k] = self.field.add(d.get(k, self.field.zero), c)
        return Polynomial.from_keys(self, d)

    def linear_form(self, coeffs: Sequence) -> "Polynomial":
        if len(coeffs) != self.nvars:
            raise ValueError("wrong number of coefficients")
        return self.from_dict({tuple(int(i == j) for j in range(self.nvars)): c
                               for i, c in enumerate(coeffs)})

    def parse(self, text: str) -> "Polynomial":
        return _Parser(self, text).parse()

    def irrelevant_generators(self) -> list["Polynomial"]:
        return self.gens()


class Polynomial:
    """An immutable polynomial: terms ``(key, coeff)`` strictly descending by key."""

    __slots__ = ("ring", "_terms", "_deg")

    def __init__(self, ring: Ring, terms: tuple):
        self.ring = ring
        self._terms = terms
        self._deg = None

    @classmethod
    def from_keys(cls, ring: Ring, d: Mapping[int, object]) -> "Polynomial":
        """Build from ``{packed key: raw coefficient}``; zero coefficients are dropped."""
        return cls(ring, tuple(sorted(((k, c) for k, c in d.items() if c), reverse=True)))

    # -- access -------------------------------------------------------------
    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self):
        return len(self._terms)

    @property
    def lead_key(self) -> int:
        return self._terms[0][0]

    @property
    def lc(self):
        return self._terms[0][1]

    @property
    def lm(self) -> Monomial:
        return self.ring.unpack(self._terms[0][0])

    def terms(self) -> list[tuple[object, Monomial]]:
        """``(coefficient, Monomial)`` pairs, leading term first."""
        return [(c, self.ring.unpack(k)) for k, c in self._terms]

    def monomials(self) -> list[Monomial]:
        return [self.ring.unpack(k) for k, _ in self._terms]

    def to_dict(self) -> dict:
        return {self.ring.unpack(k): c for k, c in self._terms}

    def coefficient(self, exps: Sequence[int]):
        k = self.ring.pack(exps)
        for kk, c in self._terms:
            if kk == k:
                return c
        return self.ring.field.zero

    def degree(self) -> int:
        """Largest weighted degree of a term (-1 for zero)."""
        if self._deg is None:
            kd = self.ring.key_degree
            self._deg = max((kd(k) for k, _ in self._terms), default=-1)
        return self._deg

    def total_degree(self) -> int:
        td = self.ring.key_total_degree
        return max((td(k) for k, _ in self._terms), default=-1)

    def is_homogeneous(self) -> bool:
        if not self._terms:
            return True
        kd = self.ring.key_degree
        d0 = kd(self._terms[0][0])
        return all(kd(k) == d0 for k, _ in self._terms)

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and self._terms[0][0] == self.ring.V)

    def is_linear_form(self) -> bool:
        return all(self.ring.key_total_degree(k) == 1 for k, _ in self._terms)

    def linear_coefficients(self) -> list:
        """Coefficient vector of a linear form."""
        if not self.is_linear_form():
            raise ValueError("not a linear form")
        out = [self.ring.field.zero] * self.ring.nvars
        for c, m in self.terms():
            out[m.index(1)] = c
        return out

    # -- arithmetic -----------------------------------------------------------
    def _check(self, other: "Polynomial"):
        if other.ring is not self.ring and other.ring != self.ring:
            raise RingMismatch("ring mismatch")

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        return self.ring.const(other)

    def __add__(self, other):
        other = self._coerce(other)
        return Polynomial.from_keys(self.ring, _combine(self._terms, other._terms, 1, self.ring.modulus))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        return Polynomial.from_keys(self.ring, _combine(self._terms, other._terms, -1, self.ring.modulus))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __neg__(self):
        p = self.ring.modulus
        if p:
            return Polynomial(self.ring, tuple((k, -c % p) for k, c in self._terms))
        return Polynomial(self.ring, tuple((k, -c) for k, c in self._terms))

    def scale(self, c) -> "Polynomial":
        c = self.ring.field(c)
        if not c:
            return self.ring.zero()
        p = self.ring.modulus
        if p:
            return Polynomial(self.ring, tuple((k, a * c % p) for k, a in self._terms))
        return Polynomial(self.ring, tuple((k, a * c) for k, a in self._terms))

    def monic(self) -> "Polynomial":
        if not self._terms:
            return self
        return self.scale(self.ring.field.inv(self._terms[0][1]))

    def mul_term(self, key: int, c) -> "Polynomial":
        """Multiply by ``c`` times the monomial with packed key ``key``."""
        shift = key - self.ring.V
        p = self.ring.modulus
        if not c:
            return self.ring.zero()
        if p:
            return Polynomial(self.ring, tuple((k + shift, a * c % p) for k, a in self._terms))
        return Polynomial(self.ring, tuple((k + shift, a * c) for k, a in self._terms))

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        self._check(other)
        if not self._terms or not other._terms:
            return self.ring.zero()
        if self.total_degree() + other.total_degree() > MAX_EXPONENT:
            raise OverflowError("product degree too large")
        V = self.ring.V
        p = self.ring.modulus
        d: dict = {}
        get = d.get
        for k1, c1 in self._terms:
            base = k1 - V
            for k2, c2 in other._terms:
                k = base + k2
                d[k] = get(k, 0) + c1 * c2
        if p:
            d = {k: c % p for k, c in d.items()}
        return Polynomial.from_keys(self.ring, d)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power")
        result = self.ring.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == self.ring.const(other)._terms
        return NotImplemented

    def __hash__(self):
        return hash(self._terms)

    def substitute(self, images: Sequence["Polynomial"]) -> "Polynomial":
        return substitute_linear(self, images)

    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return f"Polynomial({format_polynomial(self)!r})"


def _combine(a: tuple, b: tuple, sign: int, p) -> dict:
    d = dict(a)
    get = d.get
    if p:
        for k, c in b:
            v = (get(k, 0) + sign * c) % p
            if v:
                d[k] = v
            else:
                d.pop(k, None)
    else:
        for k, c in b:
            v = get(k, 0) + sign * c
            if v:
                d[k] = v
            else:
                d.pop(k, None)
    return d


def poly_arithmetic(f: Polynomial, g: Polynomial | None, op: str, c=None) -> Polynomial:
    """Dispatch ``op`` in {"add", "sub", "mul", "scale"}; ``scale`` uses ``c`` and ignores ``g``."""
    if op == "scale":
        return f.scale(c)
    if op not in ("add", "sub", "mul"):
        raise ValueError(f"unknown op {op!r}")
    if f.ring != g.ring:
        raise RingMismatch("ring mismatch")
    return {"add": f.__add__, "sub": f.__sub__, "mul": f.__mul__}[op](g)


def substitute_linear(f: Polynomial, images: Sequence[Polynomial]) -> Polynomial:
    """Substitute ``x_i -> images[i]``; the images must be linear forms (or zero)."""
    src = f.ring
    if len(images) != src.nvars:
        raise ValueError(f"need {src.nvars} images, got {len(images)}")
    if not images:
        raise ValueError("no images")
    target = images[0].ring
    for im in images:
        if im.ring != target:
            raise RingMismatch("images live in different rings")
        if im and not im.is_linear_form():
            raise ValueError("images must be linear forms")
    powers: dict = {}

    def power(i, e):
        if (i, e) not in powers:
            powers[i, e] = images[i] ** e
        return powers[i, e]

    p = target.modulus
    acc: dict = {}
    for c, m in f.terms():
        t = target.const(c)
        for i, e in enumerate(m):
            if e:
                t = t * power(i, e)
                if not t:
                    break
        for k, a in t._terms:
            acc[k] = acc.get(k, 0) + a
    if p:
        acc = {k: v % p for k, v in acc.items()}
    return Polynomial.from_keys(target, acc)


def remap_variables(f: Polynomial, target: Ring, index_map: Sequence[int]) -> Polynomial:
    """Send ``x_i`` of ``f.ring`` to ``x_{index_map[i]}`` of ``target`` (monomial map)."""
    d = {}
    for k, c in f._terms:
        exps = [0] * target.nvars
        for i, e in enumerate(f.ring.unpack(k)):
            if e:
                exps[index_map[i]] += e
        d[target.pack(exps)] = target.field(c)
    return Polynomial.from_keys(target, d)


def format_coefficient(field: Field, c) -> object:
    p = field.modulus
    if p and c > p // 2:
        return c - p
    return c


def format_polynomial(f: Polynomial) -> str:
    if not f._terms:
        return "0"
    names = f.ring.names
    parts = []
    for c, m in f.terms():
        c = format_coefficient(f.ring.field, c)
        mono = "*".join(n if e == 1 else f"{n}^{e}" for n, e in zip(names, m) if e)
        neg = c < 0
        a = -c if neg else c
        if not mono:
            body = str(a)
        elif a == 1:
            body = mono
        else:
            body = f"{a}*{mono}"
        if isinstance(a, Fraction) and a.denominator != 1 and mono:
            body = f"({a})*{mono}"
        parts.append(("- " if neg else "+ ") + body)
    s = " ".join(parts)
    return s[2:] if s.startswith("+ ") else "-" + s[2:]


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\*\*|[-+*/^()]))")


class _Parser:
    """Recursive-descent parser for polynomial expressions over a ring."""

    def __init__(self, ring: Ring, text: str):
        self.ring = ring
        self.text = text
        self.tokens = []
        pos = 0
        text = text.rstrip()
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if not m or m.end() == pos:
                raise ValueError(f"cannot parse {text!r} at position {pos}")
            num, name, op = m.groups()
            if num is not None:
                self.tokens.append(("num", int(num)))
            elif name is not None:
                self.tokens.append(("name", name))
            else:
                self.tokens.append(("op", "^" if op == "**" else op))
            pos = m.end()
        self.i = 0
        self.names = {n: j for j, n in enumerate(ring.names)}

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None)

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def parse(self) -> Polynomial:
        if not self.tokens:
            raise ValueError("empty expression")
        f = self.expr()
        if self.i != len(self.tokens):
            raise ValueError(f"trailing input in {self.text!r}")
        return f

    def expr(self):
        kind, val = self.peek()
        sign = 1
        if (kind, val) in (("op", "-"), ("op", "+")):
            self.take()
            sign = -1 if val == "-" else 1
        f = self.term()
        if sign < 0:
            f = -f
        while self.peek() in (("op", "+"), ("op", "-")):
            _, op = self.take()
            g = self.term()
            f = f + g if op == "+" else f - g
        return f

    def term(self):
        f = self.factor()
        while self.peek() in (("op", "*"), ("op", "/")):
            _, op = self.take()
            g = self.factor()
            if op == "*":
                f = f * g
            else:
                if not g.is_constant() or not g:
                    raise ValueError("can only divide by a nonzero constant")
                f = f.scale(self.ring.field.inv(g.lc))
        return f

    def factor(self):
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            kind, val = self.take()
            if kind != "num":
                raise ValueError("exponent must be an integer")
            base = base ** val
        return base

    def atom(self):
        kind, val = self.take()
        if kind == "num":
            return self.ring.const(val)
        if kind == "name":
            if val not in self.names:
                raise ValueError(f"unknown variable {val!r}")
            return self.ring.var(self.names[val])
        if (kind, val) == ("op", "("):
            f = self.expr()
            if self.take() != ("op", ")"):
                raise ValueError("unbalanced parentheses")
            return f
        if (kind, val) == ("op", "-"):
            return -self.factor()
        raise ValueError(f"unexpected token {val!r} in {self.text!r}")
