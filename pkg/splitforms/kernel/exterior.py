"""
The graded exterior algebra over R^n with rational-function coefficients.

Basis elements are strictly increasing index tuples: ``(0, 2)`` stands for dx1/\\dx3 on a form and for
Dx1/\\Dx3 on a multivector.
"""
from fractions import Fraction
from functools import lru_cache

from sympy.combinatorics import Permutation

from splitforms.kernel.coeffs import Polynomial, RationalFunction
from splitforms.kernel.exceptions import DegreeMismatchException, DimensionMismatchException


@lru_cache(maxsize=None)
def merge_basis(left, right):
    # type: (tuple, tuple) -> tuple
    """
    Sort the concatenation of two index tuples.
    :return: (sign, merged tuple); sign is 0 (and merged None) when an index repeats
    """
    if set(left) & set(right):
        return 0, None
    concatenated = left + right
    order = sorted(range(len(concatenated)), key=concatenated.__getitem__)
    sign = Permutation(order).signature() if len(order) > 1 else 1
    return sign, tuple(concatenated[i] for i in order)


@lru_cache(maxsize=None)
def contract_basis(vector_indices, form_indices):
    # type: (tuple, tuple) -> tuple
    """
    Contract D_J into dx_I. The first vector factor is applied first, so
    D_{j1}/\\.../\\D_{jp} acts as i_{jp} o ... o i_{j1}.
    :return: (sign, remaining index tuple); sign 0 when some j is missing from I
    """
    sign = 1
    remaining = list(form_indices)
    for axis in vector_indices:
        if axis not in remaining:
            return 0, None
        position = remaining.index(axis)
        if position % 2:
            sign = -sign
        del remaining[position]
    return sign, tuple(remaining)


def _accumulate(target, key, value):
    total = target[key] + value if key in target else value
    if total.is_zero():
        target.pop(key, None)
    else:
        target[key] = total


class GradedTensor(object):
    """
    Shared storage for forms and multivectors: a degree, an ambient dimension and a sparse map from
    increasing index tuples to non-zero RationalFunction coefficients.
    """
    __slots__ = ('ambient_dim', 'degree', '_coeffs')

    __hash__ = None

    def __init__(self, ambient_dim, degree, coeffs=None):
        # type: (int, int, dict) -> None
        if degree < 0:
            raise DegreeMismatchException(u"Negative degree {}".format(degree))
        clean = {}
        for indices, coefficient in (coeffs or {}).items():
            indices = tuple(indices)
            if len(indices) != degree:
                raise DegreeMismatchException(
                    u"Index tuple {} does not have length {}".format(indices, degree)
                )
            if any(b <= a for a, b in zip(indices, indices[1:])) or any(not 0 <= i < ambient_dim for i in indices):
                raise DimensionMismatchException(
                    u"Index tuple {} is not strictly increasing inside dimension {}".format(indices, ambient_dim)
                )
            coefficient = RationalFunction.lift(coefficient, ambient_dim)
            if coefficient.ambient_dim != ambient_dim:
                raise DimensionMismatchException(
                    u"Coefficient of dimension {} in a tensor of dimension {}".format(
                        coefficient.ambient_dim, ambient_dim)
                )
            if not coefficient.is_zero():
                clean[indices] = coefficient
        self.ambient_dim = ambient_dim
        self.degree = degree
        self._coeffs = clean

    @classmethod
    def _trusted(cls, ambient_dim, degree, coeffs):
        tensor = cls.__new__(cls)
        tensor.ambient_dim = ambient_dim
        tensor.degree = degree
        tensor._coeffs = coeffs
        return tensor

    @classmethod
    def zero(cls, ambient_dim, degree=0):
        # type: (int, int) -> GradedTensor
        return cls._trusted(ambient_dim, degree, {})

    @classmethod
    def basis(cls, ambient_dim, indices, coefficient=1):
        # type: (int, tuple, object) -> GradedTensor
        return cls(ambient_dim, len(indices), {tuple(indices): coefficient})

    @classmethod
    def scalar(cls, value, ambient_dim=None):
        # type: (object, int) -> GradedTensor
        value = RationalFunction.lift(value, ambient_dim)
        return cls(value.ambient_dim, 0, {(): value})

    def items(self):
        # type: () -> list
        return sorted(self._coeffs.items())

    def coefficient(self, indices):
        # type: (tuple) -> RationalFunction
        return self._coeffs.get(tuple(indices), RationalFunction.zero(self.ambient_dim))

    def is_zero(self):
        # type: () -> bool
        return not self._coeffs

    def __bool__(self):
        return bool(self._coeffs)

    def has_polynomial_coefficients(self):
        # type: () -> bool
        return all(c.is_polynomial() for c in self._coeffs.values())

    def _check_compatible(self, other):
        if type(self) is not type(other):
            raise TypeError(u"Cannot combine {} with {}".format(type(self).__name__, type(other).__name__))
        if self.ambient_dim != other.ambient_dim:
            raise DimensionMismatchException(
                u"Dimensions {} and {} differ".format(self.ambient_dim, other.ambient_dim)
            )

    def __add__(self, other):
        if not isinstance(other, GradedTensor):
            return NotImplemented
        self._check_compatible(other)
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        if self.degree != other.degree:
            raise DegreeMismatchException(
                u"Cannot add degree {} and degree {} values".format(self.degree, other.degree)
            )
        coeffs = dict(self._coeffs)
        for indices, coefficient in other._coeffs.items():
            _accumulate(coeffs, indices, coefficient)
        return self._trusted(self.ambient_dim, self.degree, coeffs)

    def __neg__(self):
        return self._trusted(self.ambient_dim, self.degree, {i: -c for i, c in self._coeffs.items()})

    def __sub__(self, other):
        if not isinstance(other, GradedTensor):
            return NotImplemented
        return self + (-other)

    def scale(self, factor):
        # type: (object) -> GradedTensor
        factor = RationalFunction.lift(factor, self.ambient_dim)
        if factor.ambient_dim != self.ambient_dim:
            raise DimensionMismatchException(
                u"Scalar of dimension {} applied to dimension {}".format(factor.ambient_dim, self.ambient_dim)
            )
        if factor.is_zero():
            return self.zero(self.ambient_dim, self.degree)
        return self._trusted(self.ambient_dim, self.degree, {i: c * factor for i, c in self._coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Polynomial, RationalFunction)):
            return self.scale(other)
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, GradedTensor) or type(self) is not type(other):
            return NotImplemented
        if self.ambient_dim != other.ambient_dim:
            return False
        if self.is_zero() and other.is_zero():
            return True
        if self.degree != other.degree or set(self._coeffs) != set(other._coeffs):
            return False
        return all(c == other._coeffs[i] for i, c in self._coeffs.items())

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def evaluate(self, point):
        # type: (list) -> GradedTensor
        """
        Evaluate every coefficient at a rational point.
        :param point: sequence of n rationals
        :return: a value of the same type with constant coefficients
        """
        coeffs = {}
        for indices, coefficient in self._coeffs.items():
            value = coefficient.evaluate(point)
            if value:
                coeffs[indices] = RationalFunction.constant(self.ambient_dim, value)
        return self._trusted(self.ambient_dim, self.degree, coeffs)

    def __repr__(self):
        return u"{}({}, {}, {!r})".format(type(self).__name__, self.ambient_dim, self.degree, dict(self.items()))


class DifferentialForm(GradedTensor):
    """A differential form of fixed degree; degrees above n only hold the zero value."""
    __slots__ = ()

    @classmethod
    def differential(cls, ambient_dim, axis):
        # type: (int, int) -> DifferentialForm
        return cls.basis(ambient_dim, (axis,))

    def scalar_value(self):
        # type: () -> RationalFunction
        if self.degree != 0 and not self.is_zero():
            raise DegreeMismatchException(u"Expected a 0-form, got degree {}".format(self.degree))
        return self.coefficient(())

    def __str__(self):
        from splitforms.cli.printer import format_form
        return format_form(self)


class MultiVector(GradedTensor):
    """A multivector field; degree 1 values are vector fields, degree 2 values bivectors."""
    __slots__ = ()

    @classmethod
    def from_components(cls, components):
        # type: (list) -> MultiVector
        """
        Vector field sum_i c_i D_i from its n components.
        """
        components = [RationalFunction.lift(c) for c in components]
        n = len(components)
        return cls(n, 1, {(axis,): c for axis, c in enumerate(components)})

    def __str__(self):
        from splitforms.cli.printer import format_multivector
        return format_multivector(self)


def form_add(alpha, beta):
    # type: (DifferentialForm, DifferentialForm) -> DifferentialForm
    return alpha + beta


def form_scale(c, alpha):
    # type: (RationalFunction, DifferentialForm) -> DifferentialForm
    return alpha.scale(c)


def wedge(alpha, beta):
    # type: (DifferentialForm, DifferentialForm) -> DifferentialForm
    """
    Exterior product. Basis products are sorted with their permutation sign; repeated indices vanish,
    so a product of total degree above n is the zero form of that degree. Multivectors wedge the same way.
    """
    if type(alpha) is not type(beta):
        raise TypeError(u"Cannot wedge {} with {}".format(type(alpha).__name__, type(beta).__name__))
    if alpha.ambient_dim != beta.ambient_dim:
        raise DimensionMismatchException(
            u"Cannot wedge forms of dimension {} and {}".format(alpha.ambient_dim, beta.ambient_dim)
        )
    coeffs = {}
    for left, a in alpha._coeffs.items():
        for right, b in beta._coeffs.items():
            sign, merged = merge_basis(left, right)
            if sign:
                _accumulate(coeffs, merged, a * b if sign > 0 else -(a * b))
    return type(alpha)._trusted(alpha.ambient_dim, alpha.degree + beta.degree, coeffs)


def wedge_all(forms, ambient_dim):
    # type: (list, int) -> DifferentialForm
    product = DifferentialForm.scalar(1, ambient_dim)
    for form in forms:
        product = wedge(product, form)
    return product


def exterior_d(omega):
    # type: (DifferentialForm) -> DifferentialForm
    """
    d(sum f_I dx_I) = sum_i sum_I (d_i f_I) dx_i /\\ dx_I.
    """
    n = omega.ambient_dim
    coeffs = {}
    for indices, coefficient in omega._coeffs.items():
        for axis in range(n):
            if axis in indices:
                continue
            derivative = coefficient.partial(axis)
            if derivative.is_zero():
                continue
            sign, merged = merge_basis((axis,), indices)
            _accumulate(coeffs, merged, derivative if sign > 0 else -derivative)
    return DifferentialForm._trusted(n, omega.degree + 1, coeffs)


def interior(vector, omega):
    # type: (MultiVector, DifferentialForm) -> DifferentialForm
    """
    Contraction of a p-vector with a k-form, giving a (k-p)-form.
    :param vector: multivector V of degree p
    :param omega: form of degree k >= p
    :return: V _| omega
    """
    if vector.ambient_dim != omega.ambient_dim:
        raise DimensionMismatchException(
            u"Cannot contract dimension {} with dimension {}".format(vector.ambient_dim, omega.ambient_dim)
        )
    if vector.degree > omega.degree:
        raise DegreeMismatchException(
            u"Cannot contract a {}-vector with a {}-form".format(vector.degree, omega.degree)
        )
    coeffs = {}
    for vector_indices, v in vector._coeffs.items():
        for form_indices, f in omega._coeffs.items():
            sign, remaining = contract_basis(vector_indices, form_indices)
            if sign:
                _accumulate(coeffs, remaining, v * f if sign > 0 else -(v * f))
    return DifferentialForm._trusted(omega.ambient_dim, omega.degree - vector.degree, coeffs)


def eval_form(omega, point):
    # type: (DifferentialForm, list) -> DifferentialForm
    return omega.evaluate(point)


def volume_form(ambient_dim):
    # type: (int) -> DifferentialForm
    """dx1 /\\ ... /\\ dxn with that orientation."""
    return DifferentialForm.basis(ambient_dim, tuple(range(ambient_dim)))


def differentials(ambient_dim):
    # type: (int) -> list
    return [DifferentialForm.differential(ambient_dim, axis) for axis in range(ambient_dim)]


def d_function(f, ambient_dim=None):
    # type: (object, int) -> DifferentialForm
    """Differential of a scalar (Polynomial or RationalFunction)."""
    return exterior_d(DifferentialForm.scalar(f, ambient_dim))
