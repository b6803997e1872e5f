import json
import os
import tempfile
from io import StringIO

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase

from arrangement.models import Multiarrangement
from arrangement.parsers import arrangement_dump
from arrangement.services import b3_n_k, boolean, coxeter_b2
from derivations.models import DegreeDimensionTable, Rank2Solution
from extend.services import yoshinaga_extension
from utils.exceptions import ConsistencyError, NotAllowed, NotFound
from .base import FreenessCommand
from .management.commands.verify_paper import Command as VerifyCommand
from .services import decone_figure, decone_svg, pivot_parse
from .verification import gf9_extension, run_verification

STAIRCASE_FORMS = (
    [(0, 0, 1)] + [(1, 0, -t) for t in (0, 1)] + [(0, 1, -t) for t in (0, 1, 2, 3)]
    + [(1, -1, -t) for t in (-2, -1, 0, 1)]
)


def wrong_solver(A):
    return Rank2Solution(0, A.total, DegreeDimensionTable(), ())


class Broken(FreenessCommand):
    takes_arrangement = False

    def run(self, **options):
        raise ConsistencyError('tripwire', dict(where='test'))


class CommandTestCase(SimpleTestCase):
    def setUp(self):
        self.directory = tempfile.TemporaryDirectory()
        self.addCleanup(self.directory.cleanup)

    def write(self, name, A):
        path = os.path.join(self.directory.name, name)
        with open(path, 'w') as handle:
            handle.write(arrangement_dump(A))
        return path

    def call(self, *args, **options):
        out = StringIO()
        call_command(*args, stdout=out, **options)
        return out.getvalue().strip()


class ArrangementCommandTests(CommandTestCase):
    def test_exponents(self):
        path = self.write('b2_2414.arr', coxeter_b2((2, 4, 1, 4)))
        self.assertEqual(self.call('exponents', path), '(5, 6)')
        data = json.loads(self.call('exponents', path, json=True))
        self.assertEqual(data['exponents'], [5, 6])

    def test_exponents_basis(self):
        path = self.write('b2_2414.arr', coxeter_b2((2, 4, 1, 4)))
        lines = self.call('exponents', path, '--basis').splitlines()
        self.assertEqual(lines[0], '(5, 6)')
        self.assertEqual([line.split(' = ')[0] for line in lines[1:]], ['theta_1', 'theta_2'])
        data = json.loads(self.call('exponents', path, '--basis', json=True))
        self.assertEqual([theta['degree'] for theta in data['basis']], [5, 6])
        self.assertTrue(all(len(theta['components']) == 2 for theta in data['basis']))
        self.assertNotIn('basis', json.loads(self.call('exponents', path, json=True)))

    def test_chi_of_empty_arrangement(self):
        path = os.path.join(self.directory.name, 'empty3.arr')
        with open(path, 'w') as handle:
            handle.write('dim 3\n')
        self.assertEqual(self.call('chi', path), 't^3')

    def test_chi_json_matches_text(self):
        path = self.write('boolean.arr', boolean(3))
        data = json.loads(self.call('chi', path, json=True))
        self.assertEqual(data['coefficients'], [1, -3, 3, -1])
        self.assertEqual((data['b1'], data['b2']), (2, 1))

    def test_freecheck_gf9(self):
        path = self.write('gf9_example.arr', gf9_extension())
        self.assertEqual(self.call('freecheck', path, '--pivot', 'z'), 'free, exp (1, 5, 5), b2 = 25')
        data = json.loads(self.call('freecheck', path, '--pivot', '0 0 1', json=True))
        self.assertEqual(data['exponents'], [1, 5, 5])

    def test_yext_then_ziegler_round_trip(self):
        A = coxeter_b2((3, 5, 2, 2))
        extended = os.path.join(self.directory.name, 'yext.arr')
        with open(extended, 'w') as handle:
            handle.write(self.call('yext', self.write('b2.arr', A)) + '\n')
        self.assertEqual(self.call('ziegler', extended) + '\n', arrangement_dump(A))

    def test_lattice(self):
        output = self.call('lattice', self.write('b2.arr', coxeter_b2()))
        self.assertIn('rank 2: 1 flats', output)
        self.assertIn('mu = 3', output)

    def test_vertex(self):
        output = self.call('vertex', self.write('b3.arr', b3_n_k(4)))
        self.assertIn('inductively free with exp (5, 5, 6)', output)
        self.assertIn('no free extension', output)
        output = self.call('vertex', self.write('b3.arr', b3_n_k(4)), '--field', 'gf:5')
        self.assertIn('localization obstruction skipped in positive characteristic', output)

    def test_exit_codes(self):
        with self.assertRaises(CommandError) as raised:
            self.call('exponents', os.path.join(self.directory.name, 'missing.arr'))
        self.assertEqual(raised.exception.returncode, 1)
        path = os.path.join(self.directory.name, 'bad.arr')
        with open(path, 'w') as handle:
            handle.write('dim 2\nH 1 0\nH 1\n')
        with self.assertRaises(CommandError) as raised:
            self.call('exponents', path)
        self.assertEqual(raised.exception.returncode, 1)
        self.assertIn('line 3', str(raised.exception))
        with self.assertRaises(CommandError) as raised:
            self.call(Broken())
        self.assertEqual(raised.exception.returncode, 2)


class MultiplicityCommandTests(CommandTestCase):
    def test_bounds(self):
        output = self.call('bounds', '--multiplicity', '2', '4', '1', '4')
        self.assertEqual(output.count('5 <= |E^H| <= 6'), 4)
        data = json.loads(self.call('bounds', '--multiplicity', '3', '5', '2', '2', json=True))
        self.assertEqual({(row['lower'], row['upper']) for row in data['bounds']}, {(6, 6)})

    def test_peak(self):
        self.assertIn('not a peak point', self.call('peak', '2', '3', '1', '3'))
        self.assertNotIn('not a peak point', self.call('peak', '1', '1', '1', '1'))
        data = json.loads(self.call('peak', '2', '2', '1', '3', json=True))
        self.assertEqual(data['exponents'], [3, 5])
        self.assertTrue(data['peak'])

    def test_fwy(self):
        output = self.call('fwy', '2', '2', '2')
        self.assertIn('theta_1', output)
        self.assertIn('theta_2', output)
        with self.assertRaises(CommandError):
            self.call('fwy', '1', '1', '5')

    def test_search(self):
        path = self.write('b2_2313.arr', coxeter_b2((2, 3, 1, 3)))
        out = os.path.join(self.directory.name, 'found')
        output = self.call('search', '--base', path, '--height', '2', '--limit', '1', '--workers', '1', '--out', out)
        self.assertIn('free_found:', output)
        self.assertIn('rational grid height <= 2', output)
        self.assertEqual(os.listdir(out), ['candidate_001.arr'])


class DeconeTests(CommandTestCase):
    def test_yoshinaga_extension_figure(self):
        E = yoshinaga_extension(coxeter_b2((3, 5, 2, 2))).to_arrangement()
        figure = decone_figure(E, pivot_parse(E, 'z'))
        self.assertEqual(len(figure.lines), 12)
        svg = self.call('decone_svg', self.write('yext.arr', E))
        self.assertEqual(svg.count('<line '), 12)
        self.assertEqual(svg, self.call('decone_svg', self.write('again.arr', E)))

    def test_staircase(self):
        E = Multiarrangement.from_forms(STAIRCASE_FORMS)
        figure = decone_figure(E, E.hyperplane((0, 0, 1)))
        self.assertEqual(len(figure.lines), 10)
        self.assertEqual(len(figure.marked_points), 7)
        self.assertEqual(decone_svg(figure).count('<circle '), 7)

    def test_boolean(self):
        figure = decone_figure(boolean(3), pivot_parse(boolean(3), 'z'))
        self.assertEqual(len(figure.lines), 2)
        self.assertEqual(figure.marked_points, [])
        self.assertEqual(sum(line.vertical for line in figure.lines), 1)

    def test_pivot_parse(self):
        E = boolean(3)
        self.assertEqual(pivot_parse(E, '0,0,1'), pivot_parse(E, 'z'))
        with self.assertRaises(NotFound):
            pivot_parse(E, '1 1 1')
        with self.assertRaises(NotAllowed):
            pivot_parse(E, 'w')
        staircase = Multiarrangement.from_forms(STAIRCASE_FORMS)
        with self.assertRaises(NotAllowed):
            decone_figure(staircase, staircase.hyperplane((1, -1, 2)))


class VerificationTests(CommandTestCase):
    def test_groups_pass(self):
        results = run_verification(only=['exponents', 'appendix', 'b3', 'gf9', 'yoshinaga'], quick=True)
        self.assertTrue(results)
        self.assertTrue(all(result.passed for result in results), [str(r) for r in results if not r.passed])

    def test_quick_search_oracle_and_property_groups_pass(self):
        results = run_verification(only=['properties', 'search', 'oracle'], quick=True)
        self.assertEqual({result.group for result in results}, {'properties', 'search', 'oracle'})
        self.assertTrue(all(result.passed for result in results), [str(r) for r in results if not r.passed])

    def test_only_selects_groups(self):
        results = run_verification(only=['gf9'])
        self.assertEqual({result.group for result in results}, {'gf9'})

    def test_sabotaged_solver_fails_with_diagnostics(self):
        results = run_verification(only=['exponents'], solver=wrong_solver)
        failed = [result for result in results if not result.passed]
        self.assertTrue(failed)
        self.assertTrue(all(result.diagnostics for result in failed))

    def test_command_exit_status(self):
        output = self.call('verify_paper', '--only', 'gf9', 'yoshinaga', '--json')
        self.assertEqual(json.loads(output)['failed'], 0)
        command = VerifyCommand()
        command.solver = wrong_solver
        out = StringIO()
        with self.assertRaises(CommandError) as raised:
            call_command(command, '--only', 'exponents', stdout=out)
        self.assertEqual(raised.exception.returncode, 1)
        self.assertIn('FAIL', out.getvalue())
