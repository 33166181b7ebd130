"""
Claims, their machine-readable reports and the built-in example suites.

A claim is a named thunk producing ``(lhs, rhs, partition)``; evaluating it compares both sides exactly
and corroborates the verdict at random rational points.
"""
import json
import logging
from collections import namedtuple
from concurrent.futures import ThreadPoolExecutor

from splitforms.cli.examples import AMBIENT_DIM, load_example
from splitforms.cli.oracle import PointOracle, checks_agree
from splitforms.cli.printer import format_value
from splitforms.common.settings import OracleSettings
from splitforms.kernel.coeffs import Polynomial, RationalFunction
from splitforms.kernel.dynamics import (
    PhaseFlow,
    bivector_flow,
    bivector_flow_from_form,
    conservation_defect,
    divergence,
    flow_from_hamiltonians,
    flow_to_form,
    form_to_flow,
    hamiltonian_bivector,
    integrating_factor_obstruction,
    pfaff_obstruction,
    vectorial_hamiltonian,
)
from splitforms.kernel.exterior import DifferentialForm, GradedTensor, d_function, exterior_d, interior
from splitforms.kernel.poincare import as_witness, splitting_potential, verify_splitting, verify_wedge_identity

logger = logging.getLogger(__name__)

KINDS = ('identity', 'closedness', 'splitting', 'pfaff', 'conservation', 'partition-dag')

Claim = namedtuple('Claim', ['claim_id', 'kind', 'compute'])
ClaimSides = namedtuple('ClaimSides', ['lhs', 'rhs', 'partition'])


def sides(lhs, rhs, partition=None):
    # type: (object, object, object) -> ClaimSides
    parts = list(partition.parts) if partition is not None and hasattr(partition, 'parts') else partition
    return ClaimSides(lhs, rhs, parts)


class Report(object):
    """
    The outcome of one claim. ``equal`` holds exactly when the printed difference is "0".
    """

    def __init__(self, claim_id, kind, lhs, rhs, equal, difference, partition=None, point_checks=(), seed=None,
                 oracle_agrees=True):
        self.claim_id = claim_id
        self.kind = kind
        self.lhs = lhs
        self.rhs = rhs
        self.equal = equal
        self.difference = difference
        self.partition = partition
        self.point_checks = list(point_checks)
        self.seed = seed
        self.oracle_agrees = oracle_agrees

    def to_dict(self):
        # type: () -> dict
        return {
            'claim_id': self.claim_id,
            'kind': self.kind,
            'lhs': self.lhs,
            'rhs': self.rhs,
            'equal': self.equal,
            'difference': self.difference,
            'partition': self.partition,
            'point_checks': [
                {'point': list(check.point), 'lhs_value': check.lhs_value, 'rhs_value': check.rhs_value}
                for check in self.point_checks
            ],
            'seed': self.seed,
            'oracle_agrees': self.oracle_agrees,
        }

    def to_json(self):
        # type: () -> str
        return json.dumps(self.to_dict(), indent=2)

    def to_text(self):
        # type: () -> str
        verdict = u"true" if self.equal else u"false"
        header = u"[{}] {} ({})".format(verdict, self.claim_id, self.kind)
        if self.partition is not None:
            header += u" partition {{{}}}".format(u",".join(str(p) for p in self.partition))
        lines = [header, u"  lhs: " + self.lhs, u"  rhs: " + self.rhs]
        if not self.equal:
            lines.append(u"  difference: " + self.difference)
        if self.point_checks:
            lines.append(u"  point checks: {} ({})".format(
                len(self.point_checks), u"agree" if self.oracle_agrees else u"DISAGREE"))
        return u"\n".join(lines)


def _difference(lhs, rhs):
    if isinstance(lhs, GradedTensor):
        return lhs - rhs
    if isinstance(lhs, PhaseFlow):
        return PhaseFlow([a - b for a, b in zip(lhs.components, rhs.components)])
    n = lhs.ambient_dim if hasattr(lhs, 'ambient_dim') else rhs.ambient_dim
    return RationalFunction.lift(lhs, n) - RationalFunction.lift(rhs, n)


def _ambient_dim(lhs, rhs):
    return lhs.ambient_dim if hasattr(lhs, 'ambient_dim') else rhs.ambient_dim


def _as_value(value, ambient_dim):
    if isinstance(value, (Polynomial, RationalFunction, GradedTensor, PhaseFlow)):
        return value
    return RationalFunction.constant(ambient_dim, value)


def evaluate_claim(claim, oracle=None):
    # type: (Claim, PointOracle) -> Report
    """
    Compute both sides of a claim, compare them exactly and attach point checks.
    """
    oracle = oracle or PointOracle()
    computed = claim.compute()
    n = _ambient_dim(computed.lhs, computed.rhs)
    lhs, rhs = _as_value(computed.lhs, n), _as_value(computed.rhs, n)
    difference = _difference(lhs, rhs)
    equal = difference.is_zero()
    checks = oracle.check(lhs, rhs, n)
    agrees = checks_agree(checks, equal)
    if not agrees:
        logger.warning("Point checks disagree with the symbolic verdict for %s", claim.claim_id)
    if equal:
        logger.info("Claim %s verified", claim.claim_id)
    else:
        logger.warning("Claim %s refuted: difference %s", claim.claim_id, difference)
    return Report(
        claim_id=claim.claim_id,
        kind=claim.kind,
        lhs=format_value(lhs),
        rhs=format_value(rhs),
        equal=equal,
        difference=u"0" if equal else format_value(difference),
        partition=computed.partition,
        point_checks=checks,
        seed=oracle.settings.seed,
        oracle_agrees=agrees,
    )


def run_claims(claims, settings=None):
    # type: (list, OracleSettings) -> list
    """
    Evaluate independent claims, possibly on several threads; reports come back in claim order.
    """
    settings = settings or OracleSettings()
    oracle = PointOracle(settings)
    logger.info("Evaluating %s claims with %s workers", len(claims), settings.workers)
    with ThreadPoolExecutor(max_workers=settings.workers) as executor:
        return list(executor.map(lambda claim: evaluate_claim(claim, oracle), claims))


def exit_code(reports):
    # type: (list) -> int
    return 0 if all(report.equal for report in reports) else 1


def _zero_form(degree):
    return DifferentialForm.zero(AMBIENT_DIM, degree)


def _zero_scalar():
    return Polynomial.zero(AMBIENT_DIM)


def _flow_by_contraction(h):
    # x_i' = X_h _| dx_i with i_{X_h} vol = dh
    vector = form_to_flow(exterior_d(h)).as_vector_field()
    return PhaseFlow([interior(vector, d_function(Polynomial.variable(AMBIENT_DIM, axis))).scalar_value()
                      for axis in range(AMBIENT_DIM)])


def _common_claims(prefix, values):
    flow, h = values['flow'], values['h']
    dh = exterior_d(h)
    return [
        Claim(prefix + '.divergence', 'identity', lambda: sides(divergence(flow), _zero_scalar())),
        Claim(prefix + '.closed-dh', 'closedness', lambda: sides(exterior_d(dh), _zero_form(3))),
        Claim(prefix + '.dh-flow-form', 'identity', lambda: sides(dh, flow_to_form(flow))),
        Claim(prefix + '.vectorial-flow', 'identity', lambda: sides(_flow_by_contraction(h), flow)),
        Claim(prefix + '.homotopy-potential', 'identity',
              lambda: sides(exterior_d(vectorial_hamiltonian(flow)), flow_to_form(flow))),
        Claim(prefix + '.conserve-H', 'conservation',
              lambda: sides(conservation_defect(flow, values['H']), _zero_scalar())),
        Claim(prefix + '.hamiltonian-bivector-H', 'identity',
              lambda: sides(hamiltonian_bivector(values['H']), values['X_H'])),
    ]


def _split_claims(prefix, dh, first, second):
    def certificate():
        return verify_splitting(dh, [as_witness(first), as_witness(second)])

    def split():
        cert = certificate()
        return sides(dh, cert.product, cert.partition)

    def potential():
        cert = certificate()
        nu = splitting_potential(cert) if cert.verified else DifferentialForm.zero(AMBIENT_DIM, 1)
        return sides(exterior_d(nu), dh, [2])

    return [
        Claim(prefix + '.split', 'splitting', split),
        Claim(prefix + '.splitting-potential', 'identity', potential),
    ]


def nambu_example_claims(number):
    # type: (int) -> list
    """Claims for the examples whose flow is given by two Hamiltonians H, F."""
    values = load_example(number)
    prefix = u"ex{}".format(number)
    flow, H, F = values['flow'], values['H'], values['F']
    dh = exterior_d(values['h'])
    claims = _common_claims(prefix, values)
    claims.extend(_split_claims(prefix, dh, H, F))
    claims.extend([
        Claim(prefix + '.nambu-flow', 'identity', lambda: sides(flow_from_hamiltonians(H, F), flow)),
        Claim(prefix + '.bivector-flow-H', 'identity', lambda: sides(bivector_flow(values['X_H'], F), flow)),
        Claim(prefix + '.bivector-flow-F', 'identity', lambda: sides(-bivector_flow(values['X_F'], H), flow)),
        Claim(prefix + '.conserve-F', 'conservation', lambda: sides(conservation_defect(flow, F), _zero_scalar())),
        Claim(prefix + '.hamiltonian-bivector-F', 'identity',
              lambda: sides(hamiltonian_bivector(F), values['X_F'])),
    ])
    return claims


def pfaff_example_claims():
    # type: () -> list
    """
    Claims for the example split by a Pfaffian form. The printed Theta does not split dh; the claims
    record the discrepancy rather than correcting it.
    """
    values = load_example(3)
    prefix = u"ex3"
    flow, H, G = values['flow'], values['H'], values['G']
    theta, theta_prime, factor = values['Theta'], values['Theta_prime'], values['g']
    dh = exterior_d(values['h'])
    X_H = values['X_H']

    def wedge_claim(form):
        def compute():
            certificate = verify_wedge_identity(dh, [d_function(H), form])
            return sides(dh, certificate.product, certificate.partition)
        return compute

    claims = _common_claims(prefix, values)
    claims.extend([
        Claim(prefix + '.pfaff-Theta', 'pfaff', lambda: sides(pfaff_obstruction(theta), _zero_form(3))),
        Claim(prefix + '.integrating-factor', 'pfaff',
              lambda: sides(integrating_factor_obstruction(theta, factor), _zero_form(2))),
        Claim(prefix + '.wedge-dH-Theta', 'identity', wedge_claim(theta)),
        Claim(prefix + '.wedge-dH-Theta-prime', 'identity', wedge_claim(theta_prime)),
        Claim(prefix + '.bivector-flow-Theta', 'identity', lambda: sides(bivector_flow_from_form(X_H, theta), flow)),
        Claim(prefix + '.bivector-flow-Theta-prime', 'identity',
              lambda: sides(bivector_flow_from_form(X_H, theta_prime), flow)),
        Claim(prefix + '.conserve-G', 'conservation', lambda: sides(conservation_defect(flow, G), _zero_scalar())),
    ])
    claims.extend(_split_claims(prefix, dh, H, G))
    return claims


def example_claims(number):
    # type: (int) -> list
    if number == 3:
        return pfaff_example_claims()
    return nambu_example_claims(number)


def run_example(number, settings=None):
    # type: (int, OracleSettings) -> list
    logger.info("Running worked example %s", number)
    return run_claims(example_claims(number), settings)


def _edge_text(edges):
    return u"[{}]".format(u", ".join(u"{}->{}".format(tail, head) for tail, head in edges))


def partition_dag_report(dag, comparison, seed=None):
    # type: (object, object, int) -> Report
    """
    Merge edges of the complete diagram against the printed figure; without a figure both sides are the edges.
    """
    edges = list(dag.edges)
    if comparison is None:
        drawn = edges
        missing, extra = [], []
    else:
        drawn = sorted(comparison.present + comparison.extra_in_figure,
                       key=lambda e: (dag._order.get(e[0], -1), dag._order.get(e[1], -1)))
        missing, extra = comparison.missing_from_figure, comparison.extra_in_figure
    equal = not missing and not extra
    if equal:
        difference = u"0"
    else:
        difference = u"missing from figure: {}; extra in figure: {}".format(_edge_text(missing), _edge_text(extra))
    return Report(
        claim_id=u"partitions.k{}".format(dag.weight),
        kind='partition-dag',
        lhs=_edge_text(edges),
        rhs=_edge_text(drawn),
        equal=equal,
        difference=difference,
        partition=[dag.weight],
        point_checks=[],
        seed=seed,
        oracle_agrees=True,
    )


def reports_to_json(reports, **extra):
    # type: (list, ...) -> str
    payload = dict(extra)
    payload['reports'] = [report.to_dict() for report in reports]
    return json.dumps(payload, indent=2)
