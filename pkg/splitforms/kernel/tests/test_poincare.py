from fractions import Fraction
from functools import reduce
from unittest import main, TestCase

from hypothesis import given, settings, strategies as st

from splitforms.kernel.coeffs import Polynomial, RationalFunction
from splitforms.kernel.exceptions import (
    DegreeMismatchException,
    NonPolynomialCoefficientException,
    NotClosedException,
    WitnessVerificationException,
)
from splitforms.kernel.exterior import (
    DifferentialForm,
    d_function,
    differentials,
    exterior_d,
    form_scale,
    volume_form,
    wedge,
)
from splitforms.kernel.partitions import Partition
from splitforms.kernel.poincare import (
    as_witness,
    coarsen_splitting,
    decomposability_necessary,
    exactness_witness,
    homotopy,
    is_closed,
    splitting_potential,
    verify_splitting,
    verify_wedge_identity,
)
from splitforms.kernel.tests.strategies import coefficients, dimension_and_forms, forms, polynomials

X, Y, Z = (Polynomial.variable(3, axis) for axis in range(3))
DX, DY, DZ = differentials(3)


@st.composite
def potentials(draw, ambient_dim=4):
    """Potentials in R^4 with non-increasing degrees whose differentials fit in one form."""
    degrees = []
    room = ambient_dim
    while room > 0 and (not degrees or draw(st.booleans())):
        degree = draw(st.integers(min_value=0, max_value=min(room - 1, degrees[-1] if degrees else room - 1)))
        degrees.append(degree)
        room -= degree + 1
    return [draw(forms(ambient_dim, degree, max_terms=2)) for degree in degrees]


def hamiltonian_example():
    # dH /\ dF for H = (x^2 + y^2 + z^2)/2 and F = xy
    H = (X ** 2 + Y ** 2 + Z ** 2).scale(Fraction(1, 2))
    F = X * Y
    return H, F, wedge(d_function(H), d_function(F))


class HomotopyTest(TestCase):

    def test_exact_one_form(self):
        omega = form_scale(Y, DX) + form_scale(X, DY)

        self.assertEqual(homotopy(omega), DifferentialForm.scalar(X * Y))

    def test_volume_form_witness(self):
        nu = exactness_witness(volume_form(3))

        self.assertEqual(nu.degree, 2)
        self.assertEqual(exterior_d(nu), volume_form(3))

    def test_zero_degree_rejected(self):
        with self.assertRaises(DegreeMismatchException):
            homotopy(DifferentialForm.scalar(X))

    def test_rational_coefficients_rejected(self):
        omega = DX.scale(RationalFunction(Polynomial.one(3), X + 1))

        with self.assertRaises(NonPolynomialCoefficientException):
            homotopy(omega)

    def test_not_closed(self):
        with self.assertRaises(NotClosedException):
            exactness_witness(form_scale(X, DY))
        self.assertFalse(is_closed(form_scale(X, DY)))

    @given(dimension_and_forms(min_degree=1))
    @settings(max_examples=200, deadline=None)
    def test_homotopy_identity(self, data):
        _, omega = data
        if omega.degree == 0:
            return
        recombined = exterior_d(homotopy(omega)) + homotopy(exterior_d(omega))

        self.assertEqual(recombined, omega)

    @given(dimension_and_forms(min_degree=1))
    @settings(max_examples=200, deadline=None)
    def test_homotopy_squares_to_zero(self, data):
        _, omega = data
        if omega.degree < 2:
            return

        self.assertTrue(homotopy(homotopy(omega)).is_zero())

    @given(dimension_and_forms())
    @settings(max_examples=200, deadline=None)
    def test_witness_for_exact_forms(self, data):
        _, nu = data
        omega = exterior_d(nu)
        if omega.degree > nu.ambient_dim:
            return

        self.assertEqual(exterior_d(exactness_witness(omega)), omega)

    @given(st.integers(min_value=1, max_value=4).flatmap(polynomials))
    @settings(max_examples=100, deadline=None)
    def test_homotopy_of_differential_recovers_function(self, f):
        origin = [0] * f.ambient_dim

        self.assertEqual(homotopy(d_function(f)), DifferentialForm.scalar(f - f.evaluate(origin), f.ambient_dim))

    @given(dimension_and_forms(min_degree=1))
    @settings(max_examples=100, deadline=None)
    def test_witnesses_differ_by_a_closed_form(self, data):
        _, nu = data
        omega = exterior_d(nu)
        if omega.degree > nu.ambient_dim:
            return

        self.assertTrue(is_closed(exactness_witness(omega) - nu))


class SplittingTest(TestCase):

    def test_example_splitting(self):
        H, F, omega = hamiltonian_example()
        certificate = verify_splitting(omega, [as_witness(H), as_witness(F)])

        self.assertTrue(certificate.verified)
        self.assertEqual(certificate.partition, Partition((1, 1)))
        self.assertTrue(certificate.difference.is_zero())

    def test_refutation_carries_difference(self):
        H, F, omega = hamiltonian_example()
        certificate = verify_splitting(omega, [as_witness(F), as_witness(H)])

        self.assertFalse(certificate.verified)
        self.assertEqual(certificate.difference, omega.scale(2))

    def test_witness_bookkeeping(self):
        omega = volume_form(3)
        with self.assertRaises(DegreeMismatchException):
            verify_splitting(omega, [])
        with self.assertRaises(DegreeMismatchException):
            verify_splitting(omega, [as_witness(X), as_witness(Y)])
        with self.assertRaises(DegreeMismatchException):
            verify_splitting(omega, [as_witness(X), form_scale(Y, DZ)])

    def test_coarsening_walks_the_filtration(self):
        omega = volume_form(3)
        finest = verify_splitting(omega, [as_witness(X), as_witness(Y), as_witness(Z)])
        middle = coarsen_splitting(finest, 0, 1)
        coarsest = coarsen_splitting(middle, 0, 1)

        self.assertEqual(finest.partition, Partition((1, 1, 1)))
        self.assertEqual(middle.partition, Partition((2, 1)))
        self.assertEqual(middle.witnesses[0], form_scale(X, DY))
        self.assertEqual(coarsest.partition, Partition((3,)))
        self.assertEqual(coarsest.witnesses, [form_scale(X, wedge(DY, DZ))])

    def test_coarsening_non_adjacent_witnesses(self):
        finest = verify_splitting(volume_form(3), [as_witness(X), as_witness(Y), as_witness(Z)])

        for i, j in ((0, 2), (1, 2)):
            coarser = coarsen_splitting(finest, i, j)
            self.assertTrue(coarser.verified)
            self.assertEqual(coarser.partition, Partition((2, 1)))

    def test_coarsening_rejects_bad_input(self):
        H, F, omega = hamiltonian_example()
        refuted = verify_splitting(omega, [as_witness(F), as_witness(H)])
        with self.assertRaises(WitnessVerificationException):
            coarsen_splitting(refuted, 0, 1)
        verified = verify_splitting(omega, [as_witness(H), as_witness(F)])
        with self.assertRaises(DegreeMismatchException):
            coarsen_splitting(verified, 1, 0)

    def test_splitting_potential(self):
        H, F, omega = hamiltonian_example()
        nu = splitting_potential(verify_splitting(omega, [as_witness(H), as_witness(F)]))

        self.assertEqual(nu, form_scale(H, d_function(F)))
        self.assertEqual(exterior_d(nu), omega)

    def test_wedge_identity_with_prehamiltonian_form(self):
        dh = form_scale(X * Y, wedge(DY, DZ)) + form_scale(X - Z, wedge(DZ, DX)) - form_scale(Y * Z, wedge(DX, DY))
        dH = d_function(X - (Y ** 2).scale(Fraction(1, 2)) + Z)
        theta = form_scale(-Z, DX) + form_scale(X, DZ)
        theta_prime = form_scale(-Z, DX) - form_scale(X, DZ)

        refuted = verify_wedge_identity(dh, [dH, theta])
        expected = form_scale(2 * X * Y, wedge(DY, DZ)) + form_scale(2 * X, wedge(DZ, DX))
        self.assertFalse(refuted.verified)
        self.assertEqual(refuted.difference, expected)
        self.assertTrue(verify_wedge_identity(dh, [dH, theta_prime]).verified)

    def test_wedge_identity_degrees(self):
        with self.assertRaises(DegreeMismatchException):
            verify_wedge_identity(volume_form(3), [DX, DY])

    @given(potentials())
    @settings(max_examples=60, deadline=None)
    def test_differentials_of_random_potentials_split(self, witnesses):
        factors = [exterior_d(mu) for mu in witnesses]
        omega = reduce(lambda product, factor: wedge(factor, product), reversed(factors))
        certificate = verify_splitting(omega, witnesses)

        self.assertTrue(certificate.verified)
        self.assertEqual(certificate.partition, Partition([mu.degree + 1 for mu in witnesses]))


class DecomposabilityTest(TestCase):

    def test_symplectic_form_is_not_decomposable(self):
        d1, d2, d3, d4 = differentials(4)

        self.assertFalse(decomposability_necessary(wedge(d1, d2) + wedge(d3, d4)))
        self.assertTrue(decomposability_necessary(wedge(d1, d2)))

    def test_only_two_forms(self):
        with self.assertRaises(DegreeMismatchException):
            decomposability_necessary(DX)

    @given(forms(4, 2), coefficients.filter(bool), polynomials(4).filter(lambda p: not p.is_zero()))
    @settings(max_examples=60, deadline=None)
    def test_invariant_under_nonzero_scaling(self, omega, constant, function):
        verdict = decomposability_necessary(omega)

        self.assertEqual(decomposability_necessary(omega.scale(constant)), verdict)
        self.assertEqual(decomposability_necessary(omega.scale(function)), verdict)


if __name__ == '__main__':
    main()
