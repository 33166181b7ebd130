#!/usr/bin/env python
"""
Command-line entry point.

Exit codes: 0 when every claim holds, 1 when at least one claim is false, 2 on usage or parse errors.
"""
import argparse
import io
import json
import logging
import os
import sys

from splitforms import __version__
from splitforms.cli.examples import example_numbers
from splitforms.cli.grammar import parse_flow, parse_form, parse_multivector, parse_scalar
from splitforms.cli.printer import format_value
from splitforms.cli.reports import (
    Claim,
    exit_code,
    partition_dag_report,
    reports_to_json,
    run_claims,
    run_example,
    sides,
)
from splitforms.common.settings import OracleSettings
from splitforms.common.utils import DEFAULT_SETTINGS_FILE, set_verbose, setup_logging
from splitforms.kernel.dynamics import (
    conservation_defect,
    flow_from_hamiltonians,
    integrating_factor_obstruction,
    nambu_bracket,
    pfaff_obstruction,
)
from splitforms.kernel.exceptions import SplitFormsException
from splitforms.kernel.exterior import DifferentialForm, exterior_d, interior, wedge
from splitforms.kernel.partitions import build_dag, compare_with_figure, count_maximal_chains, maximal_chains, to_dot
from splitforms.kernel.poincare import homotopy, verify_splitting, verify_wedge_identity

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_REFUTED = 1
EXIT_USAGE = 2


def _common_options():
    # shared by every subcommand so that flags may follow the subcommand name
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('-n', '--dim', type=int, default=argparse.SUPPRESS, help='ambient dimension (default 3)')
    common.add_argument('--json', action='store_true', default=argparse.SUPPRESS, help='machine-readable reports')
    common.add_argument('--seed', type=int, default=argparse.SUPPRESS, help='seed for random point checks')
    common.add_argument('--points', type=int, default=argparse.SUPPRESS, help='number of point checks per claim')
    common.add_argument('--config', default=argparse.SUPPRESS, help='settings file with [Oracle] and [Runner]')
    common.add_argument('-v', '--verbose', action='store_true', default=argparse.SUPPRESS, help='debug logging')
    return common


def build_parser():
    # type: () -> argparse.ArgumentParser
    common = _common_options()
    parser = argparse.ArgumentParser(prog='splitforms', parents=[common],
                                     description='Exact exterior calculus on R^n with rational coefficients.')
    parser.add_argument('--version', action='version', version='%(prog)s ' + __version__)
    commands = parser.add_subparsers(dest='command', metavar='command')
    commands.required = True

    forms = commands.add_parser('forms', help='exterior algebra operations')
    form_ops = forms.add_subparsers(dest='operation', metavar='operation')
    form_ops.required = True
    form_ops.add_parser('d', parents=[common], help='exterior derivative').add_argument('form')
    form_ops.add_parser('wedge', parents=[common], help='wedge product').add_argument('forms', nargs='+')
    interior_parser = form_ops.add_parser('interior', parents=[common], help='contract a multivector into a form')
    interior_parser.add_argument('vector')
    interior_parser.add_argument('form')
    form_ops.add_parser('homotopy', parents=[common], help='radial homotopy operator').add_argument('form')
    form_ops.add_parser('closed', parents=[common], help='closedness report').add_argument('form')

    verify = commands.add_parser('verify', help='verify splittings and identities')
    verify_ops = verify.add_subparsers(dest='operation', metavar='operation')
    verify_ops.required = True
    split = verify_ops.add_parser('split', parents=[common], help='omega = dmu_1 /\\ ... /\\ dmu_r')
    split.add_argument('--omega', required=True)
    split.add_argument('--mu', action='append', required=True)
    wedge_parser = verify_ops.add_parser('wedge', parents=[common], help='lhs = f_1 /\\ ... /\\ f_r')
    wedge_parser.add_argument('--lhs', required=True)
    wedge_parser.add_argument('--factor', action='append', required=True)
    example = verify_ops.add_parser('example', parents=[common], help='built-in worked example suite')
    example.add_argument('number', type=int, choices=example_numbers())

    nambu = commands.add_parser('nambu', help='Nambu brackets in R^3')
    nambu_ops = nambu.add_subparsers(dest='operation', metavar='operation')
    nambu_ops.required = True
    bracket = nambu_ops.add_parser('bracket', parents=[common], help='{H, F, G}')
    for name in ('--H', '--F', '--G'):
        bracket.add_argument(name, required=True)
    flow = nambu_ops.add_parser('flow', parents=[common], help='x_i\' = {H, F, x_i}')
    for name in ('--H', '--F'):
        flow.add_argument(name, required=True)
    conserve = nambu_ops.add_parser('conserve', parents=[common], help='conservation report X(G) = 0')
    conserve.add_argument('--flow', required=True)
    conserve.add_argument('--G', required=True)

    pfaff = commands.add_parser('pfaff', parents=[common], help='Frobenius test for a 1-form')
    pfaff.add_argument('form')
    pfaff.add_argument('--factor')

    partitions = commands.add_parser('partitions', parents=[common], help='merge diagram of the partitions of k')
    partitions.add_argument('k', type=int)
    partitions.add_argument('--dot', action='store_true')
    return parser


def load_settings(args):
    # type: (argparse.Namespace) -> OracleSettings
    config = getattr(args, 'config', None)
    if config:
        settings = OracleSettings.from_config_file(config)
    elif os.path.exists(DEFAULT_SETTINGS_FILE):
        settings = OracleSettings.from_config_file(DEFAULT_SETTINGS_FILE)
    else:
        settings = OracleSettings()
    return settings.replace(seed=getattr(args, 'seed', None), points=getattr(args, 'points', None))


class CommandRunner(object):
    """
    Executes one parsed command, writing results to ``out`` and returning the exit code.
    """

    def __init__(self, args, out, settings, logger=None):
        self.args = args
        self.out = out
        self.settings = settings
        self.n = getattr(args, 'dim', 3)
        self.json = getattr(args, 'json', False)
        self.logger = logger or logging.getLogger(__name__)

    def write(self, text):
        self.out.write(text)
        if not text.endswith(u'\n'):
            self.out.write(u'\n')

    def emit_value(self, value):
        text = format_value(value)
        self.write(json.dumps({'result': text}, indent=2) if self.json else text)
        return EXIT_OK

    def emit_reports(self, reports, **extra):
        if self.json:
            self.write(reports_to_json(reports, **extra))
        else:
            self.write(u"\n".join(report.to_text() for report in reports))
        return exit_code(reports)

    def run(self):
        # type: () -> int
        operation = getattr(self.args, 'operation', None) or u''
        self.logger.debug("Running %s %s in dimension %s", self.args.command, operation, self.n)
        handler = getattr(self, u"_{}_{}".format(self.args.command, operation))
        return handler()

    def _forms_d(self):
        return self.emit_value(exterior_d(parse_form(self.args.form, self.n)))

    def _forms_wedge(self):
        product = DifferentialForm.scalar(1, self.n)
        for text in self.args.forms:
            product = wedge(product, parse_form(text, self.n))
        return self.emit_value(product)

    def _forms_interior(self):
        vector = parse_multivector(self.args.vector, self.n)
        return self.emit_value(interior(vector, parse_form(self.args.form, self.n)))

    def _forms_homotopy(self):
        return self.emit_value(homotopy(parse_form(self.args.form, self.n)))

    def _forms_closed(self):
        omega = parse_form(self.args.form, self.n)
        claim = Claim(u"closed", 'closedness',
                      lambda: sides(exterior_d(omega), DifferentialForm.zero(self.n, omega.degree + 1)))
        return self.emit_reports(run_claims([claim], self.settings))

    def _verify_split(self):
        omega = parse_form(self.args.omega, self.n)
        witnesses = [parse_form(text, self.n) for text in self.args.mu]
        certificate = verify_splitting(omega, witnesses)
        claim = Claim(u"split", 'splitting', lambda: sides(omega, certificate.product, certificate.partition))
        return self.emit_reports(run_claims([claim], self.settings))

    def _verify_wedge(self):
        lhs = parse_form(self.args.lhs, self.n)
        factors = [parse_form(text, self.n) for text in self.args.factor]
        certificate = verify_wedge_identity(lhs, factors)
        claim = Claim(u"wedge", 'identity', lambda: sides(lhs, certificate.product, certificate.partition))
        return self.emit_reports(run_claims([claim], self.settings))

    def _verify_example(self):
        return self.emit_reports(run_example(self.args.number, self.settings))

    def _nambu_bracket(self):
        H, F, G = (parse_scalar(text, self.n) for text in (self.args.H, self.args.F, self.args.G))
        return self.emit_value(nambu_bracket(H, F, G))

    def _nambu_flow(self):
        H, F = parse_scalar(self.args.H, self.n), parse_scalar(self.args.F, self.n)
        return self.emit_value(flow_from_hamiltonians(H, F))

    def _nambu_conserve(self):
        flow = parse_flow(self.args.flow, self.n)
        G = parse_scalar(self.args.G, self.n)
        claim = Claim(u"conserve", 'conservation', lambda: sides(conservation_defect(flow, G), 0))
        return self.emit_reports(run_claims([claim], self.settings))

    def _pfaff_(self):
        theta = parse_form(self.args.form, self.n)
        obstruction = pfaff_obstruction(theta)
        claims = [Claim(u"pfaff", 'pfaff', lambda: sides(obstruction, DifferentialForm.zero(self.n, 3)))]
        if self.args.factor:
            factor = parse_scalar(self.args.factor, self.n)
            claims.append(Claim(u"integrating-factor", 'pfaff',
                                lambda: sides(integrating_factor_obstruction(theta, factor),
                                              DifferentialForm.zero(self.n, 2))))
        return self.emit_reports(run_claims(claims, self.settings))

    def _partitions_(self):
        dag = build_dag(self.args.k)
        report = partition_dag_report(dag, compare_with_figure(dag), self.settings.seed)
        if self.args.dot:
            self.write(to_dot(dag))
        elif self.json:
            self.write(reports_to_json(
                [report],
                weight=dag.weight,
                nodes=[{'id': node.node_id(), 'parts': list(node.parts), 'label': node.label()} for node in dag.nodes],
                edges=[[list(tail.parts), list(head.parts)] for tail, head in dag.edges],
                chains=[[list(node.parts) for node in chain] for chain in maximal_chains(dag)],
            ))
        else:
            lines = [u"{}  {}".format(node, node.label()) for node in dag.nodes]
            lines.extend(u"{} -> {}".format(tail, head) for tail, head in dag.edges)
            lines.append(u"maximal chains: {}".format(count_maximal_chains(dag)))
            lines.append(report.to_text())
            self.write(u"\n".join(lines))
        return exit_code([report])


def run_command(argv, out=None):
    # type: (list, io.TextIOBase) -> int
    """
    Parse and execute one command line.
    :param argv: arguments without the program name
    :param out: stream for results, stdout by default
    :return: exit code
    """
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    set_verbose(getattr(args, 'verbose', False))
    try:
        settings = load_settings(args)
        return CommandRunner(args, out, settings).run()
    except (SplitFormsException, ValueError, OSError) as exc:
        logger.error("Command failed: %s", exc)
        sys.stderr.write(u"error: {}\n".format(exc))
        return EXIT_USAGE


def main(argv=None):
    setup_logging()
    return run_command(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
