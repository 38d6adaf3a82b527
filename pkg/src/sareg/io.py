"""Arrangement text files.

::

    # two skew lines
    ring n=3 field=32003
    subspace: x0; x1
    subspace: x2; x3

Forms are integer linear combinations of ``x0 .. xn``; ``#`` starts a
comment and blank lines are ignored.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction

from .arrangements import Arrangement, ArrangementError, Subspace
from .field import field_from_spec
from .polynomial import Ring, format_coefficient


class ParseError(ValueError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


_HEADER = re.compile(r"^ring\s+n\s*=\s*(\d+)(?:\s+field\s*=\s*(\S+))?$", re.IGNORECASE)
_FORM_CHARS = re.compile(r"^[\sx0-9+\-*]+$")


def parse_arrangement(text: str) -> Arrangement:
    ring = None
    subspaces = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ring is None:
            m = _HEADER.match(line)
            if not m:
                raise ParseError(lineno, "expected header 'ring n=<n> field=<p|Q>'")
            n = int(m.group(1))
            if n < 1:
                raise ParseError(lineno, "n must be at least 1")
            try:
                fld = field_from_spec(m.group(2))
            except ValueError as exc:
                raise ParseError(lineno, str(exc)) from None
            ring = Ring(n + 1, fld)
            continue
        head, sep, rest = line.partition(":")
        if not sep or head.strip().lower() != "subspace":
            raise ParseError(lineno, "expected 'subspace: <form>; <form>; ...'")
        forms = []
        for chunk in rest.split(";"):
            chunk = chunk.strip()
            if not chunk:
                continue
            if not _FORM_CHARS.match(chunk):
                raise ParseError(lineno, f"bad linear form {chunk!r}")
            try:
                f = ring.parse(chunk)
            except ValueError as exc:
                raise ParseError(lineno, str(exc)) from None
            if not f or not f.is_linear_form():
                raise ParseError(lineno, f"{chunk!r} is not a nonzero linear form")
            forms.append(f)
        try:
            subspaces.append(Subspace(ring, forms))
        except ArrangementError as exc:
            raise ParseError(lineno, str(exc)) from None
    if ring is None:
        raise ParseError(1, "missing ring header")
    try:
        return Arrangement(ring, subspaces)
    except ArrangementError as exc:
        raise ParseError(lineno, str(exc)) from None


def read_arrangement(path) -> Arrangement:
    with open(path) as fh:
        return parse_arrangement(fh.read())


def format_arrangement(X: Arrangement) -> str:
    fld = X.ring.field
    lines = [f"ring n={X.n} field={fld}"]
    for V in X.subspaces:
        forms = []
        for f in V.forms:
            coeffs = f.linear_coefficients()
            if fld.modulus is None:
                den = math.lcm(*(Fraction(c).denominator for c in coeffs))
                coeffs = [int(c * den) for c in coeffs]
            terms = []
            for c, name in zip(coeffs, X.ring.names):
                c = format_coefficient(fld, c)
                if c:
                    terms.append((c, name))
            s = ""
            for c, name in terms:
                a = abs(c)
                body = name if a == 1 else f"{a}*{name}"
                if not s:
                    s = ("-" if c < 0 else "") + body
                else:
                    s += (" - " if c < 0 else " + ") + body
            forms.append(s)
        lines.append("subspace: " + "; ".join(forms))
    return "\n".join(lines) + "\n"
