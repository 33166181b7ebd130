"""
Deterministic text for kernel values, in the same grammar the parser reads.
"""
from fractions import Fraction

from splitforms.kernel.coeffs import Polynomial, RationalFunction
from splitforms.kernel.constants import ALIASES_3D, INDEXED_VARIABLE
from splitforms.kernel.exterior import DifferentialForm, MultiVector

WEDGE = u'/\\'


def variable_names(ambient_dim):
    # type: (int) -> list
    if ambient_dim == 3:
        return list(ALIASES_3D)
    return [INDEXED_VARIABLE.format(axis + 1) for axis in range(ambient_dim)]


def format_rational(value):
    # type: (Fraction) -> str
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return u"{}/{}".format(value.numerator, value.denominator)


def format_monomial(monomial, names):
    # type: (tuple, list) -> str
    factors = []
    for name, power in zip(names, monomial):
        if power == 1:
            factors.append(name)
        elif power > 1:
            factors.append(u"{}^{}".format(name, power))
    return u"*".join(factors)


def _format_term(monomial, coefficient, names):
    # coefficient is positive here
    body = format_monomial(monomial, names)
    if not body:
        return format_rational(coefficient)
    if coefficient == 1:
        return body
    return u"{} {}".format(format_rational(coefficient), body)


def format_polynomial(poly):
    # type: (Polynomial) -> str
    if poly.is_zero():
        return u"0"
    names = variable_names(poly.ambient_dim)
    pieces = []
    for position, (monomial, coefficient) in enumerate(poly.terms()):
        text = _format_term(monomial, abs(coefficient), names)
        if position == 0:
            pieces.append(u"-" + text if coefficient < 0 else text)
        else:
            pieces.append((u" - " if coefficient < 0 else u" + ") + text)
    return u"".join(pieces)


def _is_plain_power(poly):
    # a lone variable or variable power with coefficient 1, safe after '/' without parentheses
    terms = poly.terms()
    if len(terms) != 1:
        return False
    monomial, coefficient = terms[0]
    return coefficient == 1 and sum(1 for e in monomial if e) == 1


def format_scalar(value):
    # type: (object) -> str
    """
    Print a Polynomial or RationalFunction; rational functions print as numerator/denominator.
    """
    if isinstance(value, Polynomial):
        return format_polynomial(value)
    if value.is_polynomial():
        return format_polynomial(value.as_polynomial())
    numerator, denominator = value.numerator, value.denominator
    top = format_polynomial(numerator)
    if len(numerator.terms()) > 1 or (numerator.is_constant() and numerator.constant_value().denominator != 1):
        top = u"({})".format(top)
    bottom = format_polynomial(denominator)
    if not _is_plain_power(denominator):
        bottom = u"({})".format(bottom)
    return u"{}/{}".format(top, bottom)


def _leading_sign(coefficient):
    return -1 if coefficient.numerator.leading_coefficient() < 0 else 1


def _format_coefficient(coefficient):
    # coefficient has a positive leading numerator coefficient; returns '' for 1
    if coefficient.is_polynomial():
        poly = coefficient.as_polynomial()
        if poly == 1:
            return u""
        text = format_polynomial(poly)
        return text if len(poly.terms()) == 1 else u"({})".format(text)
    return format_scalar(coefficient)


def _format_graded(tensor, prefix):
    if tensor.is_zero():
        return u"0"
    if tensor.degree == 0:
        return format_scalar(tensor.coefficient(()))
    names = variable_names(tensor.ambient_dim)
    pieces = []
    for position, (indices, coefficient) in enumerate(tensor.items()):
        basis = WEDGE.join(prefix + names[axis] for axis in indices)
        sign = _leading_sign(coefficient)
        scalar = _format_coefficient(coefficient if sign > 0 else -coefficient)
        text = u"{} {}".format(scalar, basis) if scalar else basis
        if position == 0:
            pieces.append(u"-" + text if sign < 0 else text)
        else:
            pieces.append((u" - " if sign < 0 else u" + ") + text)
    return u"".join(pieces)


def format_form(form):
    # type: (DifferentialForm) -> str
    return _format_graded(form, u"d")


def format_multivector(vector):
    # type: (MultiVector) -> str
    return _format_graded(vector, u"D")


def format_flow(flow):
    # type: (object) -> str
    return u"({})".format(u", ".join(format_polynomial(c) for c in flow.components))


def format_value(value):
    # type: (object) -> str
    """Print any kernel value: scalars, forms, multivectors, flows and rationals."""
    if isinstance(value, (int, Fraction)):
        return format_rational(value)
    if isinstance(value, (Polynomial, RationalFunction)):
        return format_scalar(value)
    if isinstance(value, MultiVector):
        return format_multivector(value)
    if isinstance(value, DifferentialForm):
        return format_form(value)
    if hasattr(value, 'components'):
        return format_flow(value)
    return str(value)


def format_point(point):
    # type: (list) -> list
    return [format_rational(v) for v in point]
