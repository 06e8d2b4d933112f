"""Management command tests: exit codes, JSON answers and golden outputs."""
import json
from io import StringIO
from pathlib import Path

from django.core.management import call_command, load_command_class
from django.core.management.base import CommandError
from django.test import SimpleTestCase

GOLDEN = Path(__file__).resolve().parent / 'golden'


def run(*args):
    out = StringIO()
    call_command(*args, stdout=out)
    return out.getvalue()


def run_json(*args):
    return json.loads(run(*args, '--json'))


def golden(name):
    return json.loads((GOLDEN / name).read_text(encoding='utf-8'))


class GoldenOutputTests(SimpleTestCase):
    def test_bracket(self):
        self.assertEqual(run_json('bracket', '-N', '1', 'Dx', 'x^2*Dx'), golden('bracket.json'))

    def test_structure_constants_of_line_sl2(self):
        self.assertEqual(run_json('sc', '--fixture', 'line.sl2'), golden('sc_line_sl2.json'))

    def test_type_of_plane_sl3(self):
        self.assertEqual(run_json('type', '--fixture', 'C2.sl3'), golden('type_C2_sl3.json'))

    def test_chevalley_constants_a1(self):
        self.assertEqual(run_json('chevalley', '--type', 'A1'), golden('chevalley_A1.json'))


class ExitCodeTests(SimpleTestCase):
    def test_not_closed_is_a_negative_answer(self):
        out = StringIO()
        with self.assertRaises(CommandError) as ctx:
            call_command('closure', '-N', '1', 'Dx', 'x^2*Dx', '--json', stdout=out)
        self.assertEqual(ctx.exception.returncode, 1)
        self.assertEqual(json.loads(out.getvalue()), golden('closure_not_closed.json'))

    def test_parse_error_is_usage(self):
        out = StringIO()
        with self.assertRaises(CommandError) as ctx:
            call_command('bracket', '-N', '1', 'Dx', 'x*Dq', '--json', stdout=out)
        self.assertEqual(ctx.exception.returncode, 2)
        body = json.loads(out.getvalue())
        self.assertEqual(body['error'], 'ParseError')
        self.assertEqual(body['line'], 2)

    def test_missing_dimension(self):
        with self.assertRaises(CommandError) as ctx:
            run('bracket', 'Dx', 'x*Dx')
        self.assertEqual(ctx.exception.returncode, 2)

    def test_bracket_needs_two_fields(self):
        with self.assertRaises(CommandError) as ctx:
            run('bracket', '-N', '1', 'Dx')
        self.assertEqual(ctx.exception.returncode, 2)

    def test_fixture_and_fields_together(self):
        with self.assertRaises(CommandError) as ctx:
            run('flags', '--fixture', 'line.sl2', 'Dx')
        self.assertEqual(ctx.exception.returncode, 2)

    def test_type_of_solvable_algebra(self):
        with self.assertRaises(CommandError) as ctx:
            run('type', '--fixture', 'line.affine')
        self.assertEqual(ctx.exception.returncode, 1)

    def test_unknown_fixture(self):
        with self.assertRaises(CommandError) as ctx:
            run('flags', '--fixture', 'no.such.thing')
        self.assertEqual(ctx.exception.returncode, 2)


class CommandAnswerTests(SimpleTestCase):
    def test_bracket_human_output(self):
        self.assertEqual(run('bracket', '-N', '1', 'Dx', 'x*Dx').strip(), 'Dx')

    def test_closure(self):
        data = run_json('closure', '-N', '1', 'Dx', 'x*Dx')
        self.assertEqual(data, {'closed': True, 'N': 1, 'dim': 2, 'labels': ['X1', 'X2']})

    def test_flags(self):
        data = run_json('flags', '--fixture', 'line.affine')
        self.assertEqual(data, {'abelian': False, 'nilpotent': False, 'solvable': True, 'semisimple': False})

    def test_killing_form_of_sl2(self):
        data = run_json('killing', '--fixture', 'line.sl2')
        self.assertEqual(data['matrix'], [['0', '0', '-4'], ['0', '2', '0'], ['-4', '0', '0']])
        self.assertTrue(data['nondegenerate'])

    def test_type_human_output(self):
        self.assertEqual(run('type', '--fixture', 'line.sl2').strip(), 'A1')

    def test_georank_with_witness(self):
        data = run_json('georank', '-N', '1', 'Dx')
        self.assertEqual(data['rank'], 1)
        self.assertEqual(data['certificate'], '1')
        self.assertEqual(data['witness'], {'point': [0], 'value': '1', 'exact': True})

    def test_georank_of_rank_one_family(self):
        data = run_json('georank', '-N', '2', 'Dx', 'y*Dx', 'y^2*Dx')
        self.assertEqual(data['rank'], 1)

    def test_georank_human_output(self):
        lines = run('georank', '-N', '1', 'Dx').splitlines()
        self.assertEqual(lines, ['rank 1', 'certificate 1', 'witness (0) -> 1 (exact)'])

    def test_fixture_list(self):
        names = run('fixture', 'list', 'line.*').split()
        self.assertEqual(len(names), 4)
        self.assertIn('line.sl2', names)

    def test_fixture_show(self):
        data = run_json('fixture', 'show', 'line.sl2')
        self.assertEqual(data['name'], 'line.sl2')
        self.assertEqual(data['fields'], ['Dx', 'x*Dx', 'x^2*Dx'])

    def test_fixture_verify_subset(self):
        data = run_json('fixture', 'verify', 'line.*')
        self.assertTrue(data['ok'])
        self.assertEqual(data['failed'], [])

    def test_verify_classification_single_scenario(self):
        data = run_json('verify_classification', '--only', 'levi')
        self.assertTrue(data['passed'])
        self.assertEqual([s['name'] for s in data['scenarios']], ['Levi decomposition'])

    def test_georank_without_witness_in_box(self):
        # x(x^2 - 1)(x^2 - 4) vanishes on every point of the enlarged box [-2, 2]
        data = run_json('georank', '-N', '1', '(x^5 - 5*x^3 + 4*x)*Dx', '--box', '1')
        self.assertEqual(data['rank'], 1)
        self.assertIsNone(data['witness'])
        self.assertIn('[-2, 2]', data['witness_note'])
        lines = run('georank', '-N', '1', '(x^5 - 5*x^3 + 4*x)*Dx', '--box', '1').splitlines()
        self.assertTrue(lines[-1].startswith('no witness:'))

    def test_hw_search_on_plane_sl3(self):
        for degree in ('1', '2', '3'):
            data = run_json('hw_search', '--fixture', 'C2.sl3', '--deg', degree)
            self.assertEqual(data['count'], 0)
            self.assertEqual(data['vectors'], [])
            self.assertEqual(data['ansatz']['d'], int(degree))

    def test_hw_search_human_output(self):
        output = run('hw_search', '--fixture', 'C2.sl3', '--deg', '2')
        self.assertTrue(output.startswith('no highest-weight vectors in'))

    def test_fixture_show_by_alias(self):
        data = run_json('fixture', 'show', 'C3.prop3(1,2)')
        self.assertEqual(data['name'], 'C3.blocks(1,2)')
        self.assertEqual(data['aliases'], ['C3.prop3(1,2)'])


class CommandHelpTests(SimpleTestCase):
    def test_hyphenated_names_in_help(self):
        expected = {
            'hw_search': 'hw-search',
            'levi_check': 'levi-check',
            'verify_classification': 'verify-paper',
        }
        for command, hyphenated in expected.items():
            with self.subTest(command=command):
                self.assertIn(hyphenated, load_command_class('algebra', command).help)
