"""
Exact coefficient arithmetic: the polynomial ring Q[x1..xn] and its fraction field Q(x1..xn).

Scalars are ``fractions.Fraction`` values. Polynomials map exponent tuples to non-zero scalars and
rational functions are kept as (numerator, denominator) pairs whose equality is decided by
cross-multiplication.
"""
import logging
from fractions import Fraction
from functools import reduce
from math import gcd, lcm

from splitforms.kernel.constants import MAX_EXPONENT
from splitforms.kernel.exceptions import (
    DimensionMismatchException,
    NonPolynomialCoefficientException,
    PoleException,
    RationalDivisionByZeroException,
)

Rational = Fraction

logger = logging.getLogger(__name__)


def as_rational(value):
    # type: (object) -> Fraction
    if isinstance(value, Fraction):
        return value
    return Fraction(value)


def grlex_key(monomial):
    # type: (tuple) -> tuple
    return sum(monomial), monomial


class Polynomial(object):
    """
    An element of Q[x1..xn]. Instances are immutable; every arithmetic method returns a new value.
    """
    __slots__ = ('ambient_dim', '_terms', '_hash')

    def __init__(self, ambient_dim, terms=None):
        # type: (int, dict) -> None
        """
        :param ambient_dim: number of variables n
        :param terms: mapping from exponent tuples (length n) to scalar coefficients, zeros are dropped
        """
        if ambient_dim < 1:
            raise DimensionMismatchException(u"Ambient dimension must be positive, got {}".format(ambient_dim))
        clean = {}
        for monomial, coefficient in (terms or {}).items():
            monomial = tuple(int(e) for e in monomial)
            if len(monomial) != ambient_dim:
                raise DimensionMismatchException(
                    u"Monomial {} does not live in dimension {}".format(monomial, ambient_dim)
                )
            if any(e < 0 or e > MAX_EXPONENT for e in monomial):
                raise ValueError(u"Exponents must be non-negative machine-size integers: {}".format(monomial))
            coefficient = as_rational(coefficient)
            if coefficient:
                clean[monomial] = coefficient
        self.ambient_dim = ambient_dim
        self._terms = clean
        self._hash = None

    @classmethod
    def _trusted(cls, ambient_dim, terms):
        # type: (int, dict) -> Polynomial
        # terms must already be canonical: right length, no zero coefficients
        poly = cls.__new__(cls)
        poly.ambient_dim = ambient_dim
        poly._terms = terms
        poly._hash = None
        return poly

    @classmethod
    def zero(cls, ambient_dim):
        # type: (int) -> Polynomial
        return cls(ambient_dim)

    @classmethod
    def constant(cls, ambient_dim, value):
        # type: (int, object) -> Polynomial
        return cls(ambient_dim, {(0,) * ambient_dim: value})

    @classmethod
    def one(cls, ambient_dim):
        # type: (int) -> Polynomial
        return cls.constant(ambient_dim, 1)

    @classmethod
    def variable(cls, ambient_dim, axis):
        # type: (int, int) -> Polynomial
        if not 0 <= axis < ambient_dim:
            raise DimensionMismatchException(u"Axis {} out of range for dimension {}".format(axis, ambient_dim))
        exponents = [0] * ambient_dim
        exponents[axis] = 1
        return cls(ambient_dim, {tuple(exponents): 1})

    @classmethod
    def monomial(cls, exponents, coefficient=1):
        # type: (tuple, object) -> Polynomial
        return cls(len(exponents), {tuple(exponents): coefficient})

    def terms(self):
        # type: () -> list
        """
        Terms in canonical graded-lexicographic order, largest first.
        :return: list of (exponent tuple, Fraction) pairs
        """
        return sorted(self._terms.items(), key=lambda item: grlex_key(item[0]), reverse=True)

    def coefficient(self, monomial):
        # type: (tuple) -> Fraction
        return self._terms.get(tuple(monomial), Fraction(0))

    def is_zero(self):
        # type: () -> bool
        return not self._terms

    def is_constant(self):
        # type: () -> bool
        return all(not any(m) for m in self._terms)

    def constant_value(self):
        # type: () -> Fraction
        return self._terms.get((0,) * self.ambient_dim, Fraction(0))

    def total_degree(self):
        # type: () -> int
        if not self._terms:
            return -1
        return max(sum(m) for m in self._terms)

    def leading_term(self):
        # type: () -> tuple
        return self.terms()[0]

    def leading_coefficient(self):
        # type: () -> Fraction
        return self.leading_term()[1]

    def _check_dim(self, other):
        if self.ambient_dim != other.ambient_dim:
            raise DimensionMismatchException(
                u"Cannot combine polynomials of dimension {} and {}".format(self.ambient_dim, other.ambient_dim)
            )

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            self._check_dim(other)
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(self.ambient_dim, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms = dict(self._terms)
        for monomial, coefficient in other._terms.items():
            total = terms.get(monomial, 0) + coefficient
            if total:
                terms[monomial] = total
            else:
                terms.pop(monomial, None)
        return Polynomial._trusted(self.ambient_dim, terms)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._trusted(self.ambient_dim, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def scale(self, factor):
        # type: (object) -> Polynomial
        factor = as_rational(factor)
        if not factor:
            return Polynomial.zero(self.ambient_dim)
        return Polynomial._trusted(self.ambient_dim, {m: c * factor for m, c in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                monomial = tuple(a + b for a, b in zip(m1, m2))
                terms[monomial] = terms.get(monomial, 0) + c1 * c2
        return Polynomial._trusted(self.ambient_dim, {m: c for m, c in terms.items() if c})

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError(u"Polynomial powers take non-negative integer exponents, got {}".format(exponent))
        result = Polynomial.one(self.ambient_dim)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self._terms == Polynomial.constant(self.ambient_dim, other)._terms
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self._terms == other._terms

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ambient_dim, frozenset(self._terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    def partial(self, axis):
        # type: (int) -> Polynomial
        """
        Formal partial derivative along one axis.
        :param axis: 0-based variable index
        :return: the derivative polynomial
        """
        if not 0 <= axis < self.ambient_dim:
            raise DimensionMismatchException(u"Axis {} out of range for dimension {}".format(axis, self.ambient_dim))
        terms = {}
        for monomial, coefficient in self._terms.items():
            power = monomial[axis]
            if power:
                lowered = monomial[:axis] + (power - 1,) + monomial[axis + 1:]
                terms[lowered] = coefficient * power
        return Polynomial._trusted(self.ambient_dim, terms)

    def evaluate(self, point):
        # type: (list) -> Fraction
        """
        Exact substitution of a rational point.
        :param point: sequence of n rationals
        :return: the value as a Fraction
        """
        if len(point) != self.ambient_dim:
            raise DimensionMismatchException(
                u"Point of length {} given to a polynomial of dimension {}".format(len(point), self.ambient_dim)
            )
        point = [as_rational(v) for v in point]
        total = Fraction(0)
        for monomial, coefficient in self._terms.items():
            value = coefficient
            for base, power in zip(point, monomial):
                if power:
                    value *= base ** power
            total += value
        return total

    def divide_monomial(self, monomial):
        # type: (tuple) -> Polynomial
        return Polynomial._trusted(
            self.ambient_dim,
            {tuple(a - b for a, b in zip(m, monomial)): c for m, c in self._terms.items()},
        )

    def monomial_content(self):
        # type: () -> tuple
        """Exponent-wise minimum over all terms, i.e. the largest monomial dividing every term."""
        if not self._terms:
            return (0,) * self.ambient_dim
        return tuple(min(column) for column in zip(*self._terms))

    def __repr__(self):
        return u"Polynomial({}, {!r})".format(self.ambient_dim, dict(self.terms()))

    def __str__(self):
        from splitforms.cli.printer import format_polynomial
        return format_polynomial(self)


def _primitive_factor(poly):
    # type: (Polynomial) -> Fraction
    # factor making poly integral, primitive and with positive leading coefficient
    coefficients = [c for _, c in poly.terms()]
    common_denominator = reduce(lcm, (c.denominator for c in coefficients), 1)
    content = reduce(gcd, ((c * common_denominator).numerator for c in coefficients), 0)
    factor = Fraction(common_denominator, abs(content))
    if coefficients[0] < 0:
        factor = -factor
    return factor


def _proportionality(num, den):
    # type: (Polynomial, Polynomial) -> object
    # the scalar q with num = q * den, or None
    if set(num._terms) != set(den._terms):
        return None
    monomial, coefficient = den.leading_term()
    ratio = num.coefficient(monomial) / coefficient
    if all(num._terms[m] == ratio * c for m, c in den._terms.items()):
        return ratio
    return None


class RationalFunction(object):
    """
    An element of Q(x1..xn), stored as numerator / denominator.

    The pair is normalized (common monomial cancelled, denominator primitive over Z with a positive
    leading coefficient) but not reduced by a multivariate gcd; ``==`` uses cross-multiplication.
    """
    __slots__ = ('numerator', 'denominator')

    __hash__ = None

    def __init__(self, numerator, denominator=None):
        # type: (Polynomial, Polynomial) -> None
        if denominator is None:
            denominator = Polynomial.one(numerator.ambient_dim)
        numerator._check_dim(denominator)
        if denominator.is_zero():
            raise RationalDivisionByZeroException(u"Rational function with zero denominator")
        n = numerator.ambient_dim
        if numerator.is_zero():
            self.numerator = numerator
            self.denominator = Polynomial.one(n)
            return
        if not denominator.is_constant():
            shared = tuple(min(a, b) for a, b in zip(numerator.monomial_content(), denominator.monomial_content()))
            if any(shared):
                numerator = numerator.divide_monomial(shared)
                denominator = denominator.divide_monomial(shared)
            ratio = _proportionality(numerator, denominator)
            if ratio is not None:
                numerator = Polynomial.constant(n, ratio)
                denominator = Polynomial.one(n)
        factor = _primitive_factor(denominator)
        self.numerator = numerator.scale(factor)
        self.denominator = denominator.scale(factor)

    @property
    def ambient_dim(self):
        # type: () -> int
        return self.numerator.ambient_dim

    @classmethod
    def zero(cls, ambient_dim):
        # type: (int) -> RationalFunction
        return cls(Polynomial.zero(ambient_dim))

    @classmethod
    def one(cls, ambient_dim):
        # type: (int) -> RationalFunction
        return cls(Polynomial.one(ambient_dim))

    @classmethod
    def constant(cls, ambient_dim, value):
        # type: (int, object) -> RationalFunction
        return cls(Polynomial.constant(ambient_dim, value))

    @classmethod
    def lift(cls, value, ambient_dim=None):
        # type: (object, int) -> RationalFunction
        """
        Turn a Polynomial, RationalFunction or scalar into a RationalFunction.
        """
        if isinstance(value, RationalFunction):
            return value
        if isinstance(value, Polynomial):
            return cls(value)
        if isinstance(value, (int, Fraction)) and ambient_dim is not None:
            return cls.constant(ambient_dim, value)
        raise TypeError(u"Cannot lift {!r} to a rational function".format(value))

    def is_zero(self):
        # type: () -> bool
        return self.numerator.is_zero()

    def is_polynomial(self):
        # type: () -> bool
        return self.denominator.is_constant()

    def is_constant(self):
        # type: () -> bool
        return self.is_polynomial() and self.numerator.is_constant()

    def as_polynomial(self):
        # type: () -> Polynomial
        if not self.is_polynomial():
            raise NonPolynomialCoefficientException(
                u"Coefficient has a non-constant denominator: {}".format(self)
            )
        return self.numerator.scale(1 / self.denominator.constant_value())

    def _coerce(self, other):
        if isinstance(other, RationalFunction):
            self.numerator._check_dim(other.numerator)
            return other
        if isinstance(other, Polynomial):
            self.numerator._check_dim(other)
            return RationalFunction(other)
        if isinstance(other, (int, Fraction)):
            return RationalFunction.constant(self.ambient_dim, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.denominator == other.denominator:
            return RationalFunction(self.numerator + other.numerator, self.denominator)
        return RationalFunction(
            self.numerator * other.denominator + other.numerator * self.denominator,
            self.denominator * other.denominator,
        )

    __radd__ = __add__

    def __neg__(self):
        result = RationalFunction.__new__(RationalFunction)
        result.numerator = -self.numerator
        result.denominator = self.denominator
        return result

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalFunction(self.numerator * other.numerator, self.denominator * other.denominator)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            raise RationalDivisionByZeroException(u"Division by the zero rational function")
        return RationalFunction(self.numerator * other.denominator, self.denominator * other.numerator)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError(u"Rational function powers take non-negative integer exponents, got {}".format(exponent))
        return RationalFunction(self.numerator ** exponent, self.denominator ** exponent)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return (self.numerator * other.denominator - other.numerator * self.denominator).is_zero()

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __bool__(self):
        return not self.is_zero()

    def partial(self, axis):
        # type: (int) -> RationalFunction
        """
        Quotient rule: (num' * den - num * den') / den^2.
        :param axis: 0-based variable index
        :return: the derivative
        """
        if self.is_polynomial():
            return RationalFunction(self.numerator.partial(axis), self.denominator)
        return RationalFunction(
            self.numerator.partial(axis) * self.denominator - self.numerator * self.denominator.partial(axis),
            self.denominator * self.denominator,
        )

    def evaluate(self, point):
        # type: (list) -> Fraction
        denominator = self.denominator.evaluate(point)
        if not denominator:
            raise PoleException(u"Denominator {} vanishes at {}".format(self.denominator, _format_point(point)))
        return self.numerator.evaluate(point) / denominator

    def __repr__(self):
        return u"RationalFunction({!r}, {!r})".format(self.numerator, self.denominator)

    def __str__(self):
        from splitforms.cli.printer import format_scalar
        return format_scalar(self)


def _format_point(point):
    return u"({})".format(u", ".join(str(as_rational(v)) for v in point))


def poly_add(a, b):
    # type: (Polynomial, Polynomial) -> Polynomial
    a._check_dim(b)
    return a + b


def poly_mul(a, b):
    # type: (Polynomial, Polynomial) -> Polynomial
    a._check_dim(b)
    return a * b


def partial(p, axis):
    # type: (Polynomial, int) -> Polynomial
    return p.partial(axis)


def ratfun_add(a, b):
    # type: (RationalFunction, RationalFunction) -> RationalFunction
    return RationalFunction.lift(a) + RationalFunction.lift(b)


def ratfun_mul(a, b):
    # type: (RationalFunction, RationalFunction) -> RationalFunction
    return RationalFunction.lift(a) * RationalFunction.lift(b)


def ratfun_div(a, b):
    # type: (RationalFunction, RationalFunction) -> RationalFunction
    return RationalFunction.lift(a) / RationalFunction.lift(b)


def ratfun_partial(f, axis):
    # type: (RationalFunction, int) -> RationalFunction
    return RationalFunction.lift(f).partial(axis)


def eval_poly(p, point):
    # type: (Polynomial, list) -> Fraction
    return p.evaluate(point)


def eval_ratfun(f, point):
    # type: (RationalFunction, list) -> Fraction
    return RationalFunction.lift(f).evaluate(point)
