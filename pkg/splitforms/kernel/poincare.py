"""
Closedness, exactness witnesses from the radial homotopy operator, and certificates for splittings
omega = dmu_1 /\\ ... /\\ dmu_r indexed by the partition #m of deg(omega).
"""
import logging
from fractions import Fraction

from splitforms.kernel.coeffs import Polynomial, RationalFunction
from splitforms.kernel.exceptions import (
    DegreeMismatchException,
    DimensionMismatchException,
    NonPolynomialCoefficientException,
    NotClosedException,
    WitnessVerificationException,
)
from splitforms.kernel.exterior import DifferentialForm, exterior_d, wedge, wedge_all
from splitforms.kernel.partitions import Partition

logger = logging.getLogger(__name__)


class WedgeCertificate(object):
    """
    Outcome of comparing a form with a wedge product of factors. ``difference`` is always
    lhs minus the product, so a refutation carries the exact discrepancy.
    """

    def __init__(self, omega, factors, product, difference):
        # type: (DifferentialForm, list, DifferentialForm, DifferentialForm) -> None
        self.omega = omega
        self.factors = list(factors)
        self.product = product
        self.difference = difference
        self.verified = difference.is_zero()

    @property
    def partition(self):
        # type: () -> Partition
        degrees = [f.degree for f in self.factors]
        if not degrees or any(d < 1 for d in degrees):
            return None
        return Partition(degrees)


class SplittingCertificate(WedgeCertificate):
    """
    A claim omega in B^{#m}: witness i has degree m_i - 1 and the factors are their differentials.
    """

    def __init__(self, omega, witnesses, factors, product, difference):
        # type: (DifferentialForm, list, list, DifferentialForm, DifferentialForm) -> None
        super(SplittingCertificate, self).__init__(omega, factors, product, difference)
        self.witnesses = list(witnesses)


def is_closed(omega):
    # type: (DifferentialForm) -> bool
    return exterior_d(omega).is_zero()


def homotopy(omega):
    # type: (DifferentialForm) -> DifferentialForm
    """
    Radial homotopy operator based at the origin. A term c x^a dx_I with |a| = m and |I| = k contributes
    sum_j (-1)^j x_{I_j} c x^a / (m + k) dx_{I without I_j}, so that dK + Kd is the identity on forms of
    positive degree.
    :param omega: form of degree k >= 1 with polynomial coefficients
    :return: K(omega), of degree k - 1
    """
    if omega.degree < 1:
        raise DegreeMismatchException(u"The homotopy operator needs degree >= 1, got {}".format(omega.degree))
    if not omega.has_polynomial_coefficients():
        raise NonPolynomialCoefficientException(
            u"The homotopy operator integrates along rays through the origin; rational coefficients may have "
            u"poles there"
        )
    n = omega.ambient_dim
    k = omega.degree
    collected = {}
    for indices, coefficient in omega.items():
        for monomial, value in coefficient.as_polynomial().terms():
            weight = value / (sum(monomial) + k)
            for position, axis in enumerate(indices):
                raised = monomial[:axis] + (monomial[axis] + 1,) + monomial[axis + 1:]
                remaining = indices[:position] + indices[position + 1:]
                signed = weight if position % 2 == 0 else -weight
                bucket = collected.setdefault(remaining, {})
                bucket[raised] = bucket.get(raised, Fraction(0)) + signed
    coeffs = {indices: Polynomial(n, terms) for indices, terms in collected.items()}
    return DifferentialForm(n, k - 1, coeffs)


def exactness_witness(omega):
    # type: (DifferentialForm) -> DifferentialForm
    """
    Construct nu with d(nu) = omega for a closed polynomial form.
    :param omega: closed form of degree >= 1
    :return: the homotopy image of omega, checked before it is returned
    """
    if not is_closed(omega):
        raise NotClosedException(u"Form is not closed, so it has no exactness witness: {}".format(omega))
    nu = homotopy(omega)
    if exterior_d(nu) != omega:
        raise WitnessVerificationException(u"Homotopy witness failed d(nu) = omega for {}".format(omega))
    logger.debug("Exactness witness for degree %s form has %s terms", omega.degree, len(nu.items()))
    return nu


def _check_dimensions(omega, others):
    for other in others:
        if other.ambient_dim != omega.ambient_dim:
            raise DimensionMismatchException(
                u"Form of dimension {} compared against dimension {}".format(other.ambient_dim, omega.ambient_dim)
            )


def verify_splitting(omega, witnesses):
    # type: (DifferentialForm, list) -> SplittingCertificate
    """
    Check omega = dmu_1 /\\ ... /\\ dmu_r for supplied potentials.
    :param omega: form of degree k
    :param witnesses: potentials mu_i as DifferentialForm values (degree 0 for functions), degrees non-increasing
    :return: a SplittingCertificate carrying the partition (deg mu_i + 1) and the exact difference
    """
    if not witnesses:
        raise DegreeMismatchException(u"A splitting needs at least one witness")
    _check_dimensions(omega, witnesses)
    degrees = [w.degree for w in witnesses]
    if any(b > a for a, b in zip(degrees, degrees[1:])):
        raise DegreeMismatchException(u"Witness degrees must be non-increasing, got {}".format(degrees))
    if sum(d + 1 for d in degrees) != omega.degree:
        raise DegreeMismatchException(
            u"Witness degrees {} give a {}-form, omega has degree {}".format(
                degrees, sum(d + 1 for d in degrees), omega.degree)
        )
    factors = [exterior_d(w) for w in witnesses]
    product = wedge_all(factors, omega.ambient_dim)
    certificate = SplittingCertificate(omega, witnesses, factors, product, omega - product)
    logger.debug("Splitting with partition %s verified=%s", certificate.partition, certificate.verified)
    return certificate


def verify_wedge_identity(lhs, factors):
    # type: (DifferentialForm, list) -> WedgeCertificate
    """
    Check lhs = f_1 /\\ ... /\\ f_r when the factors need not be exact.
    """
    if not factors:
        raise DegreeMismatchException(u"A wedge identity needs at least one factor")
    _check_dimensions(lhs, factors)
    if sum(f.degree for f in factors) != lhs.degree:
        raise DegreeMismatchException(
            u"Factor degrees {} do not sum to {}".format([f.degree for f in factors], lhs.degree)
        )
    product = wedge_all(factors, lhs.ambient_dim)
    return WedgeCertificate(lhs, factors, product, lhs - product)


def decomposability_necessary(omega):
    # type: (DifferentialForm) -> bool
    """
    omega /\\ omega = 0, which every 2-form of the shape lambda_1 /\\ lambda_2 satisfies.
    Only informative when n >= 4.
    """
    if omega.degree != 2:
        raise DegreeMismatchException(u"Decomposability test applies to 2-forms, got degree {}".format(omega.degree))
    return wedge(omega, omega).is_zero()


def _sort_witnesses(witnesses):
    # bubble witnesses into non-increasing degree; swapping dmu_a, dmu_b costs (-1)^(deg dmu_a * deg dmu_b)
    ordered = list(witnesses)
    sign = 1
    swapped = True
    while swapped:
        swapped = False
        for position in range(len(ordered) - 1):
            left, right = ordered[position], ordered[position + 1]
            if left.degree < right.degree:
                if ((left.degree + 1) * (right.degree + 1)) % 2:
                    sign = -sign
                ordered[position], ordered[position + 1] = right, left
                swapped = True
    if sign < 0:
        ordered[0] = -ordered[0]
    return ordered


def coarsen_splitting(certificate, i, j):
    # type: (SplittingCertificate, int, int) -> SplittingCertificate
    """
    Merge two witnesses of a verified splitting using dmu_i /\\ dmu_j = d(mu_i /\\ dmu_j). The new partition
    is the cover of the old one that joins parts m_i and m_j.
    :param certificate: a verified SplittingCertificate
    :param i: index of the first witness
    :param j: index of the second witness, i < j
    :return: the re-verified SplittingCertificate for the coarser partition
    """
    witnesses = certificate.witnesses
    if not certificate.verified:
        raise WitnessVerificationException(u"Only verified splittings can be coarsened")
    if not 0 <= i < j < len(witnesses):
        raise DegreeMismatchException(u"Cannot merge witnesses {} and {} of {}".format(i, j, len(witnesses)))
    factors = certificate.factors
    passed = sum(f.degree for f in factors[i + 1:j])
    merged = wedge(witnesses[i], factors[j])
    if (factors[j].degree * passed) % 2:
        merged = -merged
    remaining = witnesses[:i] + [merged] + witnesses[i + 1:j] + witnesses[j + 1:]
    coarser = verify_splitting(certificate.omega, _sort_witnesses(remaining))
    if not coarser.verified:
        raise WitnessVerificationException(
            u"Merging witnesses {} and {} lost the splitting: difference {}".format(i, j, coarser.difference)
        )
    logger.debug("Coarsened %s to %s", certificate.partition, coarser.partition)
    return coarser


def splitting_potential(certificate):
    # type: (SplittingCertificate) -> DifferentialForm
    """
    Coarsen a verified splitting down to a single part; the last witness nu satisfies d(nu) = omega.
    """
    while len(certificate.witnesses) > 1:
        certificate = coarsen_splitting(certificate, 0, 1)
    if not certificate.verified:
        raise WitnessVerificationException(u"Splitting is not verified")
    return certificate.witnesses[0]


def as_witness(value, ambient_dim=None):
    # type: (object, int) -> DifferentialForm
    """Accept scalars (Polynomial, RationalFunction) as 0-form witnesses."""
    if isinstance(value, DifferentialForm):
        return value
    return DifferentialForm.scalar(RationalFunction.lift(value, ambient_dim))
