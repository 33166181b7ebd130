import json
import logging
import time
from io import StringIO
from unittest import main, TestCase
from unittest.mock import patch

from splitforms.cli.commands import EXIT_OK, EXIT_REFUTED, EXIT_USAGE, build_parser, load_settings, main as cli_main
from splitforms.cli.commands import run_command
from splitforms.common.settings import OracleSettings


def run(*argv):
    out = StringIO()
    code = run_command(list(argv), out)
    return code, out.getvalue()


class CommandsTest(TestCase):

    @classmethod
    def setUpClass(cls):
        logging.basicConfig(level=logging.ERROR)

    def test_example_one(self):
        code, output = run('verify', 'example', '1', '--json')
        payload = json.loads(output)
        reports = {report['claim_id']: report for report in payload['reports']}

        self.assertEqual(code, EXIT_OK)
        self.assertTrue(reports['ex1.split']['equal'])
        self.assertTrue(reports['ex1.nambu-flow']['equal'])
        self.assertTrue(reports['ex1.vectorial-flow']['equal'])

    def test_example_three_exits_one(self):
        code, output = run('--json', 'verify', 'example', '3')
        reports = {report['claim_id']: report for report in json.loads(output)['reports']}

        self.assertEqual(code, EXIT_REFUTED)
        self.assertFalse(reports['ex3.wedge-dH-Theta']['equal'])
        self.assertNotEqual(reports['ex3.wedge-dH-Theta']['difference'], u"0")
        self.assertTrue(reports['ex3.pfaff-Theta']['equal'])
        self.assertTrue(reports['ex3.integrating-factor']['equal'])

    def test_output_is_deterministic(self):
        self.assertEqual(run('verify', 'example', '2', '--seed', '5'), run('verify', 'example', '2', '--seed', '5'))

    def test_seed_and_points_flags(self):
        code, output = run('verify', 'example', '2', '--json', '--seed', '99', '--points', '21')
        report = json.loads(output)['reports'][0]

        self.assertEqual(report['seed'], 99)
        self.assertEqual(len(report['point_checks']), 21)

    def test_partitions_dot(self):
        code, output = run('partitions', '4', '--dot')

        self.assertEqual(code, EXIT_OK)
        self.assertTrue(output.startswith(u"digraph H4 {"))
        self.assertEqual(output.count(u"->"), 5)

    @patch('splitforms.cli.commands.maximal_chains')
    def test_partitions_dot_does_not_list_chains(self, mocked_chains):
        started = time.monotonic()
        code, output = run('partitions', '14', '--dot')

        mocked_chains.assert_not_called()
        self.assertEqual(code, EXIT_OK)
        self.assertTrue(output.startswith(u"digraph H14 {"))
        self.assertLess(time.monotonic() - started, 30)

    def test_partitions_json(self):
        code, output = run('partitions', '5', '--json')
        payload = json.loads(output)

        self.assertEqual(code, EXIT_REFUTED)
        self.assertEqual(payload['weight'], 5)
        self.assertEqual(len(payload['nodes']), 7)
        self.assertEqual(len(payload['edges']), 9)
        self.assertEqual(payload['reports'][0]['kind'], 'partition-dag')

    def test_partitions_json_lists_chains(self):
        payload = json.loads(run('partitions', '4', '--json')[1])

        self.assertEqual(payload['chains'], [[[1, 1, 1, 1], [2, 1, 1], [3, 1], [4]],
                                             [[1, 1, 1, 1], [2, 1, 1], [2, 2], [4]]])

    def test_partitions_text(self):
        code, output = run('partitions', '3')

        self.assertEqual(code, EXIT_OK)
        self.assertIn(u"maximal chains: 1", output)

    def test_partitions_text_counts_chains(self):
        code, output = run('partitions', '6')

        self.assertEqual(code, EXIT_REFUTED)
        self.assertIn(u"maximal chains: 11", output)

    def test_forms(self):
        self.assertEqual(run('forms', 'd', '-z dx + x dz'), (EXIT_OK, u"2 dx/\\dz\n"))
        self.assertEqual(run('forms', 'wedge', 'dy', 'dx'), (EXIT_OK, u"-dx/\\dy\n"))
        self.assertEqual(run('forms', 'interior', 'Dx', 'dx/\\dy'), (EXIT_OK, u"dy\n"))
        self.assertEqual(run('forms', 'homotopy', 'y dx + x dy'), (EXIT_OK, u"x*y\n"))

    def test_forms_json(self):
        code, output = run('forms', 'd', 'x*y', '--json')

        self.assertEqual(json.loads(output), {'result': u"y dx + x dy"})

    def test_indexed_dimension(self):
        self.assertEqual(run('forms', 'd', 'x1 x2', '-n', '2'), (EXIT_OK, u"x2 dx1 + x1 dx2\n"))

    def test_closed(self):
        self.assertEqual(run('forms', 'closed', 'x dy')[0], EXIT_REFUTED)
        self.assertEqual(run('forms', 'closed', 'y dx + x dy')[0], EXIT_OK)

    def test_verify_split_and_wedge(self):
        omega = u"(x^2 - y^2) dx/\\dy - x*z dy/\\dz + y*z dz/\\dx"

        self.assertEqual(run('verify', 'split', '--omega', omega, '--mu', '1/2 (x^2 + y^2 + z^2)', '--mu', 'x y')[0],
                         EXIT_OK)
        self.assertEqual(run('verify', 'split', '--omega', omega, '--mu', 'x y', '--mu', '1/2 (x^2 + y^2 + z^2)')[0],
                         EXIT_REFUTED)
        self.assertEqual(run('verify', 'wedge', '--lhs', 'dx/\\dy', '--factor', 'dx', '--factor', 'dy')[0], EXIT_OK)

    def test_nambu(self):
        H, F = u"1/2 (x^2 + y^2 + z^2)", u"x y"

        self.assertEqual(run('nambu', 'bracket', '--H', 'x', '--F', 'y', '--G', 'z'), (EXIT_OK, u"1\n"))
        self.assertEqual(run('nambu', 'flow', '--H', H, '--F', F), (EXIT_OK, u"(-x*z, y*z, x^2 - y^2)\n"))
        self.assertEqual(run('nambu', 'conserve', '--flow', '-x*z, y*z, x^2 - y^2', '--G', H)[0], EXIT_OK)
        self.assertEqual(run('nambu', 'conserve', '--flow', '-x*z, y*z, x^2 - y^2', '--G', 'z')[0], EXIT_REFUTED)

    def test_pfaff(self):
        self.assertEqual(run('pfaff', '-z dx + x dz', '--factor', '1/(x^2 + z^2)')[0], EXIT_OK)
        self.assertEqual(run('pfaff', 'dz - y dx')[0], EXIT_REFUTED)

    def test_pfaff_of_zero_form(self):
        self.assertEqual(run('pfaff', '0'), run('pfaff', 'dx - dx'))
        self.assertEqual(run('pfaff', '0')[0], EXIT_OK)

    def test_commands_log_dispatch(self):
        with self.assertLogs('splitforms.cli.commands', level='DEBUG') as logs:
            run('forms', 'd', 'x')

        self.assertIn(u"Running forms d in dimension 3", logs.output[0])

    def test_parse_errors_exit_two(self):
        with patch('sys.stderr', new_callable=StringIO) as stderr:
            code, _ = run('forms', 'd', 'x +')

        self.assertEqual(code, EXIT_USAGE)
        self.assertTrue(stderr.getvalue().startswith(u"error: 1:4:"))

    def test_type_errors_exit_two(self):
        with patch('sys.stderr', new_callable=StringIO):
            self.assertEqual(run('forms', 'd', 'dx dy')[0], EXIT_USAGE)
            self.assertEqual(run('pfaff', 'dx/\\dy')[0], EXIT_USAGE)
            self.assertEqual(run('forms', 'homotopy', '1/x dx')[0], EXIT_USAGE)

    def test_usage_errors_exit_two(self):
        with patch('sys.stderr', new_callable=StringIO):
            self.assertEqual(run('verify', 'example', '4')[0], EXIT_USAGE)
            self.assertEqual(run('forms')[0], EXIT_USAGE)
            self.assertEqual(run('partitions', 'four')[0], EXIT_USAGE)

    def test_load_settings_overrides(self):
        args = build_parser().parse_args(['verify', 'example', '1', '--seed', '4'])
        settings = load_settings(args)

        self.assertIsInstance(settings, OracleSettings)
        self.assertEqual(settings.seed, 4)

    @patch('splitforms.cli.commands.setup_logging')
    def test_main(self, mocked_setup_logging):
        with patch('sys.stdout', new_callable=StringIO) as stdout:
            code = cli_main(['nambu', 'bracket', '--H', 'x', '--F', 'y', '--G', 'z'])

        mocked_setup_logging.assert_called_once_with()
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(stdout.getvalue(), u"1\n")


if __name__ == '__main__':
    main()
