"""
Phase flows on R^n and the forms attached to them: i_X vol, divergence, vectorial Hamiltonians,
Nambu brackets, first integrals, Pfaff integrability and integrating factors.
"""
import logging

from splitforms.kernel.coeffs import Polynomial, RationalFunction
from splitforms.kernel.exceptions import (
    DegreeMismatchException,
    DimensionMismatchException,
    NotDivergenceFreeException,
)
from splitforms.kernel.exterior import (
    DifferentialForm,
    MultiVector,
    d_function,
    exterior_d,
    interior,
    volume_form,
    wedge,
)
from splitforms.kernel.poincare import exactness_witness

logger = logging.getLogger(__name__)


def _as_polynomial(value):
    if isinstance(value, Polynomial):
        return value
    return RationalFunction.lift(value).as_polynomial()


class PhaseFlow(object):
    """
    The right-hand side of x_i' = X_i(x), one polynomial per coordinate.
    """

    def __init__(self, components):
        # type: (list) -> None
        components = tuple(_as_polynomial(c) for c in components)
        if not components:
            raise DimensionMismatchException(u"A phase flow needs at least one component")
        n = len(components)
        for component in components:
            if component.ambient_dim != n:
                raise DimensionMismatchException(
                    u"Flow with {} components has a component in dimension {}".format(n, component.ambient_dim)
                )
        self.components = components

    @classmethod
    def zero(cls, ambient_dim):
        # type: (int) -> PhaseFlow
        return cls([Polynomial.zero(ambient_dim)] * ambient_dim)

    @property
    def ambient_dim(self):
        # type: () -> int
        return len(self.components)

    def __len__(self):
        return len(self.components)

    def __iter__(self):
        return iter(self.components)

    def __getitem__(self, axis):
        return self.components[axis]

    def __eq__(self, other):
        if not isinstance(other, PhaseFlow):
            return NotImplemented
        return self.components == other.components

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash(self.components)

    def __neg__(self):
        return PhaseFlow([-c for c in self.components])

    def is_zero(self):
        # type: () -> bool
        return all(c.is_zero() for c in self.components)

    def as_vector_field(self):
        # type: () -> MultiVector
        return MultiVector.from_components(self.components)

    def apply(self, function):
        # type: (Polynomial) -> Polynomial
        """
        Derivative of a function along the flow, X(G) = sum_i X_i dG/dx_i.
        """
        if function.ambient_dim != self.ambient_dim:
            raise DimensionMismatchException(
                u"Function of dimension {} along a flow of dimension {}".format(function.ambient_dim, self.ambient_dim)
            )
        total = Polynomial.zero(self.ambient_dim)
        for axis, component in enumerate(self.components):
            total = total + component * function.partial(axis)
        return total

    def __repr__(self):
        return u"PhaseFlow({!r})".format(list(self.components))

    def __str__(self):
        from splitforms.cli.printer import format_flow
        return format_flow(self)


class HamiltonianPair(object):
    """Two scalar Hamiltonians H, F of a Nambu flow in R^3."""

    def __init__(self, H, F):
        # type: (Polynomial, Polynomial) -> None
        if H.ambient_dim != F.ambient_dim:
            raise DimensionMismatchException(
                u"Hamiltonians live in dimensions {} and {}".format(H.ambient_dim, F.ambient_dim)
            )
        self.H = H
        self.F = F

    def flow(self):
        # type: () -> PhaseFlow
        return flow_from_hamiltonians(self.H, self.F)


def _require_3d(*values):
    for value in values:
        if value.ambient_dim != 3:
            raise DimensionMismatchException(
                u"Nambu structures are defined here for n = 3, got n = {}".format(value.ambient_dim)
            )


def flow_to_form(flow):
    # type: (PhaseFlow) -> DifferentialForm
    """i_X (dx1 /\\ ... /\\ dxn); in R^3 this is X_1 dy/\\dz + X_2 dz/\\dx + X_3 dx/\\dy."""
    return interior(flow.as_vector_field(), volume_form(flow.ambient_dim))


def form_to_flow(omega):
    # type: (DifferentialForm) -> PhaseFlow
    """
    The flow X with i_X vol = omega.
    :param omega: form of degree n - 1 with polynomial coefficients
    :return: PhaseFlow
    """
    n = omega.ambient_dim
    if omega.degree != n - 1 and not omega.is_zero():
        raise DegreeMismatchException(u"Expected a {}-form, got degree {}".format(n - 1, omega.degree))
    components = []
    for axis in range(n):
        complement = tuple(i for i in range(n) if i != axis)
        coefficient = omega.coefficient(complement).as_polynomial()
        components.append(coefficient if axis % 2 == 0 else -coefficient)
    return PhaseFlow(components)


def divergence(flow):
    # type: (PhaseFlow) -> Polynomial
    total = Polynomial.zero(flow.ambient_dim)
    for axis, component in enumerate(flow.components):
        total = total + component.partial(axis)
    return total


def vectorial_hamiltonian(flow):
    # type: (PhaseFlow) -> DifferentialForm
    """
    An (n-2)-form h with dh = i_X vol, built by the homotopy operator.
    :param flow: divergence-free PhaseFlow
    :return: h
    """
    div = divergence(flow)
    if not div.is_zero():
        raise NotDivergenceFreeException(u"Flow has divergence {}".format(div))
    h = exactness_witness(flow_to_form(flow))
    logger.debug("Vectorial Hamiltonian: %s", h)
    return h


def gradient(function):
    # type: (Polynomial) -> list
    return [function.partial(axis) for axis in range(function.ambient_dim)]


def nambu_bracket(H, F, G):
    # type: (Polynomial, Polynomial, Polynomial) -> Polynomial
    """
    {H, F, G} = det d(H, F, G)/d(x, y, z), the p with dH /\\ dF /\\ dG = p dx/\\dy/\\dz.
    """
    _require_3d(H, F, G)
    (a, b, c), (d, e, f), (g, h, i) = gradient(H), gradient(F), gradient(G)
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def flow_from_hamiltonians(H, F):
    # type: (Polynomial, Polynomial) -> PhaseFlow
    _require_3d(H, F)
    return PhaseFlow([nambu_bracket(H, F, Polynomial.variable(3, axis)) for axis in range(3)])


def conservation_defect(flow, function):
    # type: (PhaseFlow, Polynomial) -> Polynomial
    """Derivative of ``function`` along the flow."""
    return flow.apply(function)


def is_first_integral(flow, function):
    # type: (PhaseFlow, Polynomial) -> bool
    return conservation_defect(flow, function).is_zero()


def hamiltonian_bivector(H):
    # type: (Polynomial) -> MultiVector
    """
    X_H = H_x Dy/\\Dz + H_y Dz/\\Dx + H_z Dx/\\Dy, so that X_H _| dF/\\dG = {H, F, G}.
    """
    _require_3d(H)
    hx, hy, hz = gradient(H)
    return MultiVector(3, 2, {(1, 2): hx, (0, 2): -hy, (0, 1): hz})


def bivector_flow_from_form(bivector, theta):
    # type: (MultiVector, DifferentialForm) -> PhaseFlow
    """
    Flow with components B _| theta /\\ dx_i.
    """
    _require_3d(bivector, theta)
    if bivector.degree != 2 or theta.degree != 1:
        raise DegreeMismatchException(
            u"Expected a bivector and a 1-form, got degrees {} and {}".format(bivector.degree, theta.degree)
        )
    components = []
    for axis in range(3):
        contracted = interior(bivector, wedge(theta, DifferentialForm.differential(3, axis)))
        components.append(contracted.scalar_value())
    return PhaseFlow(components)


def bivector_flow(bivector, F):
    # type: (MultiVector, Polynomial) -> PhaseFlow
    return bivector_flow_from_form(bivector, d_function(F))


def vectorial_bracket(h, function):
    # type: (DifferentialForm, Polynomial) -> Polynomial
    """{h, G} = X_h _| dG where i_{X_h} vol = dh."""
    return form_to_flow(exterior_d(h)).apply(function)


def _require_one_form(theta, what):
    # the zero form of any degree is accepted
    if theta.degree != 1 and not theta.is_zero():
        raise DegreeMismatchException(u"{} apply to 1-forms, got degree {}".format(what, theta.degree))


def pfaff_obstruction(theta):
    # type: (DifferentialForm) -> DifferentialForm
    """
    d theta /\ theta; the Pfaff equation theta = 0 is integrable exactly when it vanishes.
    """
    _require_one_form(theta, u"Pfaff equations")
    return wedge(exterior_d(theta), theta)


def pfaff_integrable(theta):
    # type: (DifferentialForm) -> bool
    return pfaff_obstruction(theta).is_zero()


def integrating_factor_obstruction(theta, factor):
    # type: (DifferentialForm, RationalFunction) -> DifferentialForm
    _require_one_form(theta, u"Integrating factors")
    return exterior_d(theta.scale(factor))


def check_integrating_factor(theta, factor):
    # type: (DifferentialForm, RationalFunction) -> bool
    """g is an integrating factor of theta when g theta is closed."""
    return integrating_factor_obstruction(theta, factor).is_zero()
