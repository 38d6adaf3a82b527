"""Exact coefficient fields: prime fields F_p and the rationals.

Field objects operate on *raw* values (plain ``int`` residues for F_p,
``fractions.Fraction`` for Q) so that the polynomial kernels can do their
inner loops with native Python arithmetic.  :class:`FieldElement` wraps a raw
value together with its field for the user-facing API, where mixing fields
must be caught.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Union

DEFAULT_PRIME = 32003

Raw = Union[int, Fraction]


class FieldError(ArithmeticError):
    pass


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


class PrimeField:
    """The field with ``p`` elements, residues kept in ``[0, p)``."""

    __slots__ = ("p",)

    def __init__(self, p: int = DEFAULT_PRIME):
        p = int(p)
        if not (1 < p < 2**31) or not is_prime(p):
            raise ValueError(f"p={p} is not a prime below 2^31")
        self.p = p

    # the polynomial kernels branch on this to reduce with ``% p``
    @property
    def modulus(self) -> int:
        return self.p

    @property
    def characteristic(self) -> int:
        return self.p

    zero = 0
    one = 1

    def __call__(self, x) -> int:
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise FieldError("zero divisor")
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        return int(x) % self.p

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def mul(self, a: int, b: int) -> int:
        return a * b % self.p

    def neg(self, a: int) -> int:
        return -a % self.p

    def inv(self, a: int) -> int:
        if a % self.p == 0:
            raise FieldError("zero divisor")
        return pow(a, -1, self.p)

    def div(self, a: int, b: int) -> int:
        return a * self.inv(b) % self.p

    def random(self, rng: random.Random) -> int:
        return rng.randrange(self.p)

    def to_str(self, a: int) -> str:
        return str(a)

    def element(self, x) -> "FieldElement":
        return FieldElement(self, self(x))

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("F", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"

    def __str__(self):
        return str(self.p)


class RationalField:
    """The rationals, stored as reduced fractions with positive denominator."""

    __slots__ = ()

    modulus = None
    characteristic = 0
    zero = Fraction(0)
    one = Fraction(1)

    def __call__(self, x) -> Fraction:
        return Fraction(x)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise FieldError("zero divisor")
        return 1 / Fraction(a)

    def div(self, a, b):
        return Fraction(a) * self.inv(b)

    def random(self, rng: random.Random, bound: int = 100) -> Fraction:
        # genericity over Q only needs enough distinct values
        return Fraction(rng.randint(-bound, bound))

    def to_str(self, a: Fraction) -> str:
        return str(a)

    def element(self, x) -> "FieldElement":
        return FieldElement(self, self(x))

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "RationalField()"

    def __str__(self):
        return "Q"


Field = Union[PrimeField, RationalField]

QQ = RationalField()


def field_from_spec(spec: Union[str, int, None]) -> Field:
    """Parse ``"Q"`` or a prime (as int or decimal string); ``None`` gives F_32003."""
    if spec is None:
        return PrimeField(DEFAULT_PRIME)
    if isinstance(spec, str):
        s = spec.strip()
        if s.upper() in ("Q", "QQ"):
            return QQ
        if not s.isdigit():
            raise ValueError(f"bad field {spec!r}: expected a prime or Q")
        spec = int(s)
    return PrimeField(spec)


class FieldElement:
    """A field value tagged with its field; arithmetic refuses to mix fields."""

    __slots__ = ("field", "value")

    def __init__(self, field: Field, value: Raw):
        self.field = field
        self.value = field(value)

    def _check(self, other) -> Raw:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldError("field mismatch")
            return other.value
        return self.field(other)

    def __add__(self, other):
        return FieldElement(self.field, self.field.add(self.value, self._check(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElement(self.field, self.field.sub(self.value, self._check(other)))

    def __rsub__(self, other):
        return FieldElement(self.field, self.field.sub(self._check(other), self.value))

    def __mul__(self, other):
        return FieldElement(self.field, self.field.mul(self.value, self._check(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return FieldElement(self.field, self.field.div(self.value, self._check(other)))

    def __rtruediv__(self, other):
        return FieldElement(self.field, self.field.div(self._check(other), self.value))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        try:
            return self.value == self.field(other)
        except (TypeError, ValueError, FieldError):
            return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"{self.value} in {self.field!r}"


def field_arithmetic(a: FieldElement, b: FieldElement, op: str) -> FieldElement:
    """Apply ``op`` in {"add", "sub", "mul", "div"} to two elements of one field."""
    if not isinstance(a, FieldElement) or not isinstance(b, FieldElement):
        raise TypeError("field_arithmetic expects FieldElement operands")
    if a.field != b.field:
        raise FieldError("field mismatch")
    try:
        fn = {"add": a.field.add, "sub": a.field.sub, "mul": a.field.mul, "div": a.field.div}[op]
    except KeyError:
        raise ValueError(f"unknown op {op!r}") from None
    return FieldElement(a.field, fn(a.value, b.value))
