import pytest

from sareg import (Arrangement, ArrangementError, Ring, Subspace, arrangement_ideal, auxiliary_line,
                   format_arrangement, parse_arrangement, product_ideal, random_arrangement, sharp_example)
from sareg.ideal import saturate, saturation_degree
from sareg.io import ParseError
from oracles import in_ideal

SKEW = """\
# two skew lines
ring n=3 field=32003

subspace: x0; x1   # first line
subspace: x2; x3
"""


def test_parse_and_roundtrip():
    X = parse_arrangement(SKEW)
    assert (X.n, X.d, X.codims) == (3, 2, [2, 2])
    Y = parse_arrangement(format_arrangement(X))
    assert [V.row_space() for V in Y] == [V.row_space() for V in X]
    Z = random_arrangement(3, 3, [1, 2, 3], seed=4)
    assert arrangement_ideal(parse_arrangement(format_arrangement(Z))) == arrangement_ideal(Z)


def test_parse_over_rationals():
    X = parse_arrangement("ring n=2 field=Q\nsubspace: 2*x0 - 3*x1\n")
    assert X.ring.field.modulus is None
    assert "2*x0 - 3*x1" in format_arrangement(X)


@pytest.mark.parametrize("text, lineno", [
    ("subspace: x0\n", 1),
    ("ring n=2\nsubspace: x0 +\n", 2),
    ("ring n=2\n\nsubspace: x0^2\n", 3),
    ("ring n=2\nsubspace: x0; 2*x0\n", 2),
    ("ring n=2\nsubspace: x0\nline: x1\n", 3),
    ("ring n=2 field=6\n", 1),
    ("ring n=2\nsubspace: x0; x1; x2\n", 2),
    ("ring n=2\nsubspace: x5\n", 2),
    ("# nothing\n", 1),
])
def test_parse_errors_carry_line_numbers(text, lineno):
    with pytest.raises(ParseError) as exc:
        parse_arrangement(text)
    assert exc.value.lineno == lineno
    assert str(exc.value).startswith(f"line {lineno}:")


def test_duplicate_subspace_rejected():
    R = Ring(3)
    with pytest.raises(ArrangementError):
        Arrangement(R, [Subspace(R, [R.var(0)]), Subspace(R, [R.var(0).scale(3)])])


def test_arrangement_ideal_vanishes_on_each_subspace():
    X = random_arrangement(3, 3, [2, 2, 1], seed=1)
    I = arrangement_ideal(X)
    for V in X:
        gens = list(V.forms)
        assert all(in_ideal(g, gens, 4, 32003) for g in I.generators)
    assert I.contains_ideal(product_ideal(X))
    assert saturation_degree(I) == 0 and saturate(I) == I


def test_random_arrangement_deterministic():
    a = random_arrangement(4, 3, [2, 3, 1], seed=9)
    b = random_arrangement(4, 3, [2, 3, 1], seed=9)
    assert [V.row_space() for V in a] == [V.row_space() for V in b]
    with pytest.raises(ArrangementError):
        random_arrangement(2, 2, [1, 3], seed=0)


@pytest.mark.parametrize("d", [2, 3, 4])
def test_sharp_example_geometry(d):
    X = sharp_example(d, seed=1)
    L = auxiliary_line(X.ring)
    assert X.d == d and X.codims == [2] * d
    for k, V in enumerate(X, 1):
        assert V.contains_point([1, k, 0, 0])
        # meets the auxiliary line in one point only
        assert V.row_space() != L.row_space()
