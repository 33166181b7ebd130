"""
Hypothesis strategies for random polynomials and differential forms.
"""
from fractions import Fraction
from itertools import combinations

import sympy
from hypothesis import strategies as st

from splitforms.kernel.coeffs import Polynomial, RationalFunction
from splitforms.kernel.exterior import DifferentialForm

MAX_COEFFICIENT_DEGREE = 3

coefficients = st.builds(Fraction, st.integers(min_value=-5, max_value=5), st.integers(min_value=1, max_value=4))


@st.composite
def monomials(draw, ambient_dim, max_degree=MAX_COEFFICIENT_DEGREE):
    exponents = []
    remaining = max_degree
    for _ in range(ambient_dim):
        power = draw(st.integers(min_value=0, max_value=remaining))
        exponents.append(power)
        remaining -= power
    return tuple(exponents)


@st.composite
def polynomials(draw, ambient_dim, max_degree=MAX_COEFFICIENT_DEGREE, max_terms=4):
    terms = draw(st.dictionaries(monomials(ambient_dim, max_degree), coefficients, max_size=max_terms))
    return Polynomial(ambient_dim, terms)


@st.composite
def forms(draw, ambient_dim, degree=None, max_terms=3):
    """Polynomial-coefficient forms; the degree is drawn when not given."""
    if degree is None:
        degree = draw(st.integers(min_value=0, max_value=ambient_dim))
    bases = list(combinations(range(ambient_dim), degree))
    chosen = draw(st.lists(st.sampled_from(bases), max_size=max_terms, unique=True)) if bases else []
    coeffs = {indices: draw(polynomials(ambient_dim)) for indices in chosen}
    return DifferentialForm(ambient_dim, degree, coeffs)


@st.composite
def rational_forms(draw, ambient_dim, degree=None, max_terms=2):
    """Forms whose coefficients share a random nonzero polynomial denominator."""
    numerator = draw(forms(ambient_dim, degree, max_terms))
    denominator = draw(polynomials(ambient_dim, max_degree=2, max_terms=2).filter(lambda p: not p.is_zero()))
    return numerator.scale(RationalFunction(Polynomial.one(ambient_dim), denominator))


def points(ambient_dim):
    return st.lists(coefficients, min_size=ambient_dim, max_size=ambient_dim)


dimensions = st.integers(min_value=1, max_value=4)


@st.composite
def dimension_and_forms(draw, count=1, min_degree=0):
    n = draw(dimensions)
    degrees = [draw(st.integers(min_value=min(min_degree, n), max_value=n)) for _ in range(count)]
    return (n,) + tuple(draw(forms(n, degree)) for degree in degrees)


def symbols_for(ambient_dim):
    # type: (int) -> tuple
    return sympy.symbols(u" ".join(u"x{}".format(axis + 1) for axis in range(ambient_dim)), seq=True)


def to_sympy(value, symbols):
    """Polynomial or RationalFunction as a sympy expression."""
    if hasattr(value, 'numerator') and hasattr(value, 'denominator') and not isinstance(value, Fraction):
        return to_sympy(value.numerator, symbols) / to_sympy(value.denominator, symbols)
    expression = sympy.Integer(0)
    for monomial, coefficient in value.terms():
        term = sympy.Rational(coefficient.numerator, coefficient.denominator)
        for symbol, power in zip(symbols, monomial):
            term *= symbol ** power
        expression += term
    return expression
