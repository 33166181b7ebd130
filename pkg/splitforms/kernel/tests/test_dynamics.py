from fractions import Fraction
from unittest import main, TestCase

import sympy
from hypothesis import given, settings, strategies as st

from splitforms.kernel.coeffs import Polynomial, RationalFunction
from splitforms.kernel.exceptions import (
    DegreeMismatchException,
    DimensionMismatchException,
    NotDivergenceFreeException,
)
from splitforms.kernel.dynamics import (
    HamiltonianPair,
    PhaseFlow,
    bivector_flow,
    bivector_flow_from_form,
    check_integrating_factor,
    conservation_defect,
    divergence,
    flow_from_hamiltonians,
    flow_to_form,
    form_to_flow,
    hamiltonian_bivector,
    integrating_factor_obstruction,
    is_first_integral,
    nambu_bracket,
    pfaff_integrable,
    pfaff_obstruction,
    vectorial_bracket,
    vectorial_hamiltonian,
)
from splitforms.kernel.exterior import (
    DifferentialForm,
    MultiVector,
    d_function,
    differentials,
    exterior_d,
    form_scale,
    interior,
    volume_form,
    wedge,
)
from splitforms.kernel.tests.strategies import polynomials, symbols_for, to_sympy

X, Y, Z = (Polynomial.variable(3, axis) for axis in range(3))
DX, DY, DZ = differentials(3)
SYMBOLS = symbols_for(3)

H1 = (X ** 2 + Y ** 2 + Z ** 2).scale(Fraction(1, 2))
F1 = X * Y
FLOW1 = PhaseFlow([-X * Z, Y * Z, X ** 2 - Y ** 2])


def bivector(dy_dz, dz_dx, dx_dy):
    return MultiVector(3, 2, {(1, 2): dy_dz, (0, 2): -dz_dx, (0, 1): dx_dy})


class PhaseFlowTest(TestCase):

    def test_components_share_dimension(self):
        with self.assertRaises(DimensionMismatchException):
            PhaseFlow([X, Y])

    def test_rational_components_must_be_polynomial(self):
        flow = PhaseFlow([RationalFunction(X), Y, Z])

        self.assertEqual(flow[0], X)

    def test_apply(self):
        self.assertEqual(FLOW1.apply(Z), X ** 2 - Y ** 2)
        self.assertTrue(FLOW1.apply(H1).is_zero())

    def test_string(self):
        self.assertEqual(str(FLOW1), u"(-x*z, y*z, x^2 - y^2)")


class FlowFormTest(TestCase):

    def test_flow_to_form_in_three_dimensions(self):
        expected = form_scale(-X * Z, wedge(DY, DZ)) + form_scale(Y * Z, wedge(DZ, DX)) + \
            form_scale(X ** 2 - Y ** 2, wedge(DX, DY))

        self.assertEqual(flow_to_form(FLOW1), expected)

    @given(polynomials(4), polynomials(4), polynomials(4), polynomials(4))
    @settings(max_examples=50, deadline=None)
    def test_form_to_flow_inverts_flow_to_form(self, a, b, c, d):
        flow = PhaseFlow([a, b, c, d])

        self.assertEqual(form_to_flow(flow_to_form(flow)), flow)

    def test_form_to_flow_degree(self):
        with self.assertRaises(DegreeMismatchException):
            form_to_flow(DX)

    def test_divergence(self):
        self.assertTrue(divergence(FLOW1).is_zero())
        self.assertEqual(divergence(PhaseFlow([X, Y, Z])), Polynomial.constant(3, 3))

    def test_flow_form_closed_iff_divergence_free(self):
        self.assertTrue(exterior_d(flow_to_form(FLOW1)).is_zero())
        self.assertFalse(exterior_d(flow_to_form(PhaseFlow([X, Y, Z]))).is_zero())

    @given(st.integers(min_value=1, max_value=4).flatmap(lambda n: st.lists(polynomials(n), min_size=n, max_size=n)))
    @settings(max_examples=60, deadline=None)
    def test_d_of_flow_form_is_divergence_times_volume(self, components):
        flow = PhaseFlow(components)

        self.assertEqual(exterior_d(flow_to_form(flow)), volume_form(flow.ambient_dim).scale(divergence(flow)))


class VectorialHamiltonianTest(TestCase):

    def test_example_flow(self):
        h = vectorial_hamiltonian(FLOW1)

        self.assertEqual(h.degree, 1)
        self.assertEqual(exterior_d(h), flow_to_form(FLOW1))

    def test_rejects_divergent_flow(self):
        with self.assertRaises(NotDivergenceFreeException):
            vectorial_hamiltonian(PhaseFlow([X, Y, Z]))

    def test_vectorial_bracket_recovers_flow(self):
        h = vectorial_hamiltonian(FLOW1)

        for axis in range(3):
            self.assertEqual(vectorial_bracket(h, Polynomial.variable(3, axis)), FLOW1[axis])


class NambuTest(TestCase):

    def test_example_flow(self):
        self.assertEqual(flow_from_hamiltonians(H1, F1), FLOW1)
        self.assertEqual(HamiltonianPair(H1, F1).flow(), FLOW1)

    def test_bracket_of_coordinates(self):
        self.assertEqual(nambu_bracket(X, Y, Z), Polynomial.one(3))
        self.assertEqual(nambu_bracket(Y, X, Z), -Polynomial.one(3))

    def test_requires_three_dimensions(self):
        x1 = Polynomial.variable(2, 0)
        with self.assertRaises(DimensionMismatchException):
            nambu_bracket(x1, x1, x1)

    @given(polynomials(3), polynomials(3), polynomials(3))
    @settings(max_examples=60, deadline=None)
    def test_bracket_matches_jacobian_determinant(self, H, F, G):
        jacobian = sympy.Matrix([to_sympy(f, SYMBOLS) for f in (H, F, G)]).jacobian(SYMBOLS)

        self.assertEqual(sympy.expand(to_sympy(nambu_bracket(H, F, G), SYMBOLS) - jacobian.det()), 0)

    @given(polynomials(3), polynomials(3), polynomials(3))
    @settings(max_examples=60, deadline=None)
    def test_bracket_is_a_volume_coefficient(self, H, F, G):
        triple = wedge(wedge(d_function(H), d_function(F)), d_function(G))

        self.assertEqual(triple.coefficient((0, 1, 2)), RationalFunction(nambu_bracket(H, F, G)))

    @given(polynomials(3), polynomials(3))
    @settings(max_examples=60, deadline=None)
    def test_hamiltonians_are_first_integrals(self, H, F):
        flow = flow_from_hamiltonians(H, F)

        self.assertTrue(is_first_integral(flow, H))
        self.assertTrue(is_first_integral(flow, F))
        self.assertTrue(divergence(flow).is_zero())

    @given(polynomials(3), polynomials(3), polynomials(3))
    @settings(max_examples=60, deadline=None)
    def test_bracket_is_alternating(self, H, F, G):
        bracket = nambu_bracket(H, F, G)

        self.assertEqual(nambu_bracket(F, H, G), -bracket)
        self.assertEqual(nambu_bracket(H, G, F), -bracket)
        self.assertEqual(nambu_bracket(G, H, F), bracket)
        self.assertTrue(nambu_bracket(H, H, G).is_zero())
        self.assertTrue(nambu_bracket(H, F, F).is_zero())

    @given(polynomials(3), polynomials(3), polynomials(3), polynomials(3))
    @settings(max_examples=60, deadline=None)
    def test_bracket_leibniz_in_last_slot(self, H, F, G, K):
        expected = nambu_bracket(H, F, G) * K + G * nambu_bracket(H, F, K)

        self.assertEqual(nambu_bracket(H, F, G * K), expected)


class BivectorTest(TestCase):

    def test_hamiltonian_bivectors_of_first_example(self):
        self.assertEqual(hamiltonian_bivector(H1), bivector(X, Y, Z))
        self.assertEqual(hamiltonian_bivector(F1), bivector(Y, X, Polynomial.zero(3)))

    @given(polynomials(3), polynomials(3), polynomials(3))
    @settings(max_examples=60, deadline=None)
    def test_contraction_gives_bracket(self, H, F, G):
        contracted = interior(hamiltonian_bivector(H), wedge(d_function(F), d_function(G)))

        self.assertEqual(contracted.scalar_value(), RationalFunction(nambu_bracket(H, F, G)))

    def test_bivector_flows(self):
        self.assertEqual(bivector_flow(hamiltonian_bivector(H1), F1), FLOW1)
        self.assertEqual(-bivector_flow(hamiltonian_bivector(F1), H1), FLOW1)

    def test_flow_from_non_exact_form(self):
        H = X - (Y ** 2).scale(Fraction(1, 2)) + Z
        theta_prime = form_scale(-Z, DX) - form_scale(X, DZ)
        flow = PhaseFlow([X * Y, X - Z, -Z * Y])

        self.assertEqual(bivector_flow_from_form(hamiltonian_bivector(H), theta_prime), flow)

    def test_degrees_checked(self):
        with self.assertRaises(DegreeMismatchException):
            bivector_flow_from_form(hamiltonian_bivector(H1), wedge(DX, DY))


class PfaffTest(TestCase):

    def test_integrable_form_and_factor(self):
        theta = form_scale(-Z, DX) + form_scale(X, DZ)
        factor = RationalFunction(Polynomial.one(3), X ** 2 + Z ** 2)

        self.assertTrue(pfaff_integrable(theta))
        self.assertFalse(exterior_d(theta).is_zero())
        self.assertTrue(check_integrating_factor(theta, factor))
        self.assertFalse(check_integrating_factor(theta, RationalFunction(X)))

    def test_contact_form_is_not_integrable(self):
        self.assertFalse(pfaff_integrable(DZ - form_scale(Y, DX)))

    def test_only_one_forms(self):
        with self.assertRaises(DegreeMismatchException):
            pfaff_integrable(wedge(DX, DY))

    def test_obstructions(self):
        theta = form_scale(-Z, DX) + form_scale(X, DZ)

        self.assertEqual(pfaff_obstruction(DZ - form_scale(Y, DX)), volume_form(3))
        self.assertTrue(pfaff_obstruction(theta).is_zero())
        self.assertEqual(integrating_factor_obstruction(theta, X), form_scale(X.scale(3), wedge(DX, DZ)))
        self.assertEqual(conservation_defect(FLOW1, Z), X ** 2 - Y ** 2)
        self.assertTrue(conservation_defect(FLOW1, H1).is_zero())
        self.assertFalse(is_first_integral(FLOW1, Z))

    def test_zero_form_of_any_degree(self):
        self.assertTrue(pfaff_integrable(DifferentialForm.zero(3)))
        self.assertTrue(check_integrating_factor(DifferentialForm.zero(3, 2), X))

    def test_factor_checked_on_one_forms(self):
        with self.assertRaises(DegreeMismatchException):
            check_integrating_factor(wedge(DX, DY), X)

    @given(polynomials(3), polynomials(3).filter(lambda p: not p.is_zero()))
    @settings(max_examples=40, deadline=None)
    def test_integrating_factor_implies_integrable(self, f, g):
        theta = d_function(f).scale(RationalFunction(Polynomial.one(3), g))

        self.assertTrue(check_integrating_factor(theta, g))
        self.assertTrue(pfaff_integrable(theta))


if __name__ == '__main__':
    main()
