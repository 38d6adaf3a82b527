"""Castelnuovo-Mumford regularity of subspace arrangement ideals.

Two independent routes to reg(I): the graded Betti table of a minimal free
resolution, and a recursion through generic hyperplane sections and
saturation degrees.  Both run on a small exact commutative algebra kernel
(prime fields and Q, Buchberger, Schreyer syzygies).
"""

from .arrangements import (
    Arrangement, ArrangementError, Subspace, arrangement_ideal, auxiliary_line,
    product_ideal, random_arrangement, sharp_example, subspace_ideal,
)
from .field import QQ, FieldElement, FieldError, PrimeField, RationalField, field_from_spec
from .groebner import (
    DegreeCapExceeded, GroebnerBasis, NotHomogeneous, buchberger, divide,
    ideal_membership, s_polynomial,
)
from .ideal import (
    GenericityFailure, HomogeneousIdeal, generic_linear_form, hilbert_function,
    hyperplane_section, intersect, irrelevant_ideal, product, quotient_by_form,
    saturate, saturation_degree,
)
from .io import ParseError, format_arrangement, parse_arrangement, read_arrangement
from .polynomial import GREVLEX, LEX, Monomial, MonomialOrder, Polynomial, Ring, monomial_compare
from .resolution import (
    BettiTable, GradedMatrix, Resolution, ResolutionError, StrategyMismatch,
    hyperplane_regularity, minimal_resolution, regularity, resolve,
    schreyer_resolution, schreyer_syzygies,
)

__version__ = "0.1.0"
