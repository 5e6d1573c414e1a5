import json
from io import StringIO

from django.apps import apps
from django.core.management import call_command
from django.db import connections
from django.test import SimpleTestCase

from radii.cli import EXIT_DISAGREEMENT, EXIT_INVALID, EXIT_OK, render_json, render_table, run

FIBER = json.dumps({
	'rank': 1,
	'points': [{
		'sep_degree': 1,
		'profile': {'breaks': ['1'], 'slopes': ['2', '1']},
		'radii': ['3'],
	}],
})


class CommandTestCase(SimpleTestCase):

	def run_cli(self, *argv, stdin=None):
		stdout, stderr = StringIO(), StringIO()
		code = run(list(argv), stdout=stdout, stderr=stderr, stdin=stdin)
		return code, stdout.getvalue(), stderr.getvalue()

	def run_json(self, *argv, stdin=None):
		code, out, err = self.run_cli(*argv, stdin=stdin)
		self.assertEqual(code, EXIT_OK, err)
		return json.loads(out)


class GenerateTests(CommandTestCase):

	def test_frobenius(self):
		code, out, _ = self.run_cli('gen', 'frobenius', '-p', '2')
		self.assertEqual(code, EXIT_OK)
		self.assertEqual(out.strip(), '{"breaks":["1"],"slopes":["2","1"]}')

	def test_tame(self):
		self.assertEqual(self.run_json('gen', 'tame'), {'breaks': [], 'slopes': ['1']})

	def test_inseparable(self):
		self.assertEqual(self.run_json('gen', 'inseparable', '-p', '3', '--delta', '2'), {'breaks': ['1'], 'slopes': ['3', '1']})
		self.assertEqual(
			self.run_json('gen', 'inseparable', '-p', '5', '--delta', '0'),
			{'breaks': [], 'slopes': ['5'], 'etale': False},
		)

	def test_off_centered_frobenius(self):
		payload = self.run_json('gen', 'off-frobenius', '-p', '2', '--val-a', '0', '--u', '1/2')
		self.assertEqual(payload, {'breaks': ['1/2'], 'slopes': ['2', '1']})

	def test_off_centered_frobenius_out_of_regime(self):
		code, out, err = self.run_cli('gen', 'off-frobenius', '-p', '2', '--val-a', '0', '--u', '1')
		self.assertEqual(code, EXIT_INVALID)
		self.assertEqual(out, '')
		self.assertIn('not a bijection', err)

	def test_family_and_instantiate(self):
		family = self.run_json('gen', 'family', 'inseparable', '-p', '2', '--nu', '1')
		self.assertEqual(family['interval'], ['0', 'inf'])
		profile = self.run_json('gen', 'instantiate', json.dumps(family), '--u', '1')
		self.assertEqual(profile, {'breaks': ['1'], 'slopes': ['2', '1']})

	def test_family_without_a_different(self):
		code, out, err = self.run_cli('gen', 'family', 'inseparable', '-p', '2', '--nu', '0')
		self.assertEqual(code, EXIT_INVALID)
		self.assertEqual(out, '')
		self.assertIn('no etale profile', err)

	def test_not_a_prime(self):
		code, _, err = self.run_cli('gen', 'frobenius', '-p', '4')
		self.assertEqual(code, EXIT_INVALID)
		self.assertIn('4 is not a prime', err)


class ProfileCommandTests(CommandTestCase):

	def test_from_series(self):
		payload = self.run_json('profile', 'from-series', '{"terms": [[1, "3"], [2, "1"], [4, "0"]]}')
		self.assertEqual(payload, {'breaks': ['1/2', '2'], 'slopes': ['4', '2', '1']})

	def test_compose(self):
		f2 = '{"breaks": ["1"], "slopes": ["2", "1"]}'
		self.assertEqual(self.run_json('profile', 'compose', f2, f2), {'breaks': ['1/2', '1'], 'slopes': ['4', '2', '1']})

	def test_invert_and_eval(self):
		f2 = '{"breaks": ["1"], "slopes": ["2", "1"]}'
		self.assertEqual(self.run_json('profile', 'invert', f2), {'breaks': ['2'], 'slopes': ['1/2', '1']})
		self.assertEqual(self.run_json('profile', 'eval', f2, '--at', '3'), {'at': '3', 'value': '4'})
		self.assertEqual(self.run_json('profile', 'degrees', f2, '--at', '1'), {'at': '1', 'left': '1', 'right': '2'})

	def test_decimal_option_is_rejected(self):
		code, out, err = self.run_cli('profile', 'eval', '{"breaks": ["1"], "slopes": ["2", "1"]}', '--at', '0.5')
		self.assertEqual((code, out), (EXIT_INVALID, ''))
		self.assertIn('not of the form n or n/d', err)

	def test_n_function(self):
		payload = self.run_json('profile', 'n-function', '{"breaks": ["1"], "slopes": ["2", "1"]}')
		self.assertEqual(payload, {'steps': [['2', 2], ['0', 1]]})

	def test_stdin(self):
		payload = self.run_json('profile', 'pow', '-', '--n', '2', stdin=StringIO('{"breaks": ["2"], "slopes": ["1/2", "1"]}'))
		self.assertEqual(payload, {'breaks': ['2'], 'slopes': ['1', '2']})


class PushforwardCommandTests(CommandTestCase):

	def test_radii(self):
		self.assertEqual(self.run_json('pushforward', 'radii', FIBER), {'logvalues': ['4', '4']})

	def test_oracle(self):
		payload = self.run_json('pushforward', 'radii', FIBER, '--oracle', '--phi')
		self.assertIs(payload['agreement'], True)
		self.assertEqual(payload['bruteforce'], ['4', '4'])
		self.assertEqual(payload['profile'], {'breaks': ['4'], 'slopes': ['0', '2'], 'rank': 2})
		self.assertEqual(payload['phi'], [['0', 0, 0], ['2', 0, 0], ['4', 2, 0]])

	def test_profile(self):
		self.assertEqual(self.run_json('pushforward', 'profile', FIBER), {'breaks': ['4'], 'slopes': ['0', '2'], 'rank': 2})

	def test_constant(self):
		payload = self.run_json('pushforward', 'constant', '{"breaks": ["1/2"], "slopes": ["3", "1"]}', '--sep', '1')
		self.assertEqual(payload, {'logvalues': ['3/2', '3/2', '0']})

	def test_disc(self):
		payload = self.run_json('pushforward', 'disc', '{"breaks": ["1"], "slopes": ["2", "1"]}', '{"logvalues": ["1/2"]}')
		self.assertEqual(payload, {'logvalues': ['2', '1']})

	def test_special(self):
		self.assertEqual(self.run_json('pushforward', 'special', '{"logvalues": ["3"]}', 'tame', '-d', '2'), {'logvalues': ['3', '3']})
		payload = self.run_json('pushforward', 'special', '{"logvalues": ["0"]}', 'frobenius', '-p', '3')
		self.assertEqual(payload, {'logvalues': ['3/2', '3/2', '0']})

	def test_radius_literals(self):
		fiber = FIBER.replace('"3"', '"1/8"')
		self.assertEqual(self.run_json('pushforward', 'radii', fiber, '--base', '2'), {'logvalues': ['4', '4']})

	def test_invalid_input_is_reported_with_a_pointer(self):
		fiber = FIBER.replace('"3"', '"three"')
		code, out, err = self.run_cli('pushforward', 'radii', fiber)
		self.assertEqual(code, EXIT_INVALID)
		self.assertEqual(out, '')
		self.assertIn('/points/0/radii/0: ', err)

	def test_call_command(self):
		out = StringIO()
		call_command('pushforward', 'radii', FIBER, '--format', 'table', stdout=out)
		self.assertEqual(out.getvalue().strip(), 'logvalues  4  4')


class OtherCommandTests(CommandTestCase):

	def test_herbrand(self):
		payload = self.run_json('herbrand', 'jumps', '{"breaks": ["1"], "slopes": ["2", "1"]}')
		self.assertEqual(payload, {'degree': 2, 'jumps': [['2', 1]]})
		self.assertEqual(self.run_json('herbrand', 'radii', json.dumps(payload)), {'logvalues': ['2', '0']})

	def test_polygon(self):
		payload = self.run_json('polygon', '{"logvalues": ["4", "4"]}')
		self.assertEqual(payload, {'vertices': [[0, '0'], [1, '4'], [2, '8']], 'height': '8'})

	def test_polygon_table(self):
		code, out, _ = self.run_cli('polygon', '{"logvalues": ["2", "0"]}', '--format', 'table')
		self.assertEqual(code, EXIT_OK)
		self.assertEqual(out.splitlines()[-1].split(), ['height', '2'])

	def test_irregularity(self):
		payload = self.run_json('irregularity', '{"components": [["0", 1], ["2", 0]]}')
		self.assertEqual(payload, {'irregularity': 1, 'partial': [0, 1]})

	def test_bad_base(self):
		code, _, err = self.run_cli('polygon', '{"logvalues": ["1/4"]}', '--base', '4')
		self.assertEqual(code, EXIT_INVALID)
		self.assertIn('not a prime', err)

	def test_malformed_json(self):
		code, out, _ = self.run_cli('polygon', '{"logvalues": [')
		self.assertEqual((code, out), (EXIT_INVALID, ''))

	def test_missing_file(self):
		code, _, _ = self.run_cli('polygon', '/nonexistent/radii.json')
		self.assertEqual(code, EXIT_INVALID)

	def test_unknown_command(self):
		code, _, err = self.run_cli('frobnicate')
		self.assertEqual(code, EXIT_INVALID)
		self.assertIn('usage: radii', err)

	def test_no_arguments(self):
		code, out, err = self.run_cli()
		self.assertEqual((code, out), (EXIT_INVALID, ''))
		self.assertIn('usage: radii', err)

	def test_help_goes_to_stdout(self):
		code, out, err = self.run_cli('--help')
		self.assertEqual((code, err), (EXIT_OK, ''))
		self.assertTrue(out.startswith('usage: radii'))

	def test_command_help_goes_to_stdout(self):
		code, out, err = self.run_cli('polygon', '--help')
		self.assertEqual((code, err), (EXIT_OK, ''))
		self.assertIn('--format', out)


class CheckCommandTests(CommandTestCase):

	def test_riemann_hurwitz(self):
		payload = self.run_json('check', 'rh', '{"g_y": 0, "g_x": 0, "d": 2, "branches": [[0, 2], [0, 2]]}')
		self.assertEqual(payload, {'lhs': -2, 'rhs': -2, 'agreement': True})

	def test_riemann_hurwitz_disagreement(self):
		"""Output is still written before exiting with 2."""
		code, out, err = self.run_cli('check', 'rh', '{"g_y": 1, "g_x": 0, "d": 2, "branches": [[0, 2], [0, 2]]}')
		self.assertEqual(code, EXIT_DISAGREEMENT)
		self.assertIs(json.loads(out)['agreement'], False)
		self.assertIn('disagree', err)

	def test_laplacian(self):
		self.assertIs(self.run_json('check', 'laplacian', '{"delta_y": 1, "delta_x": 1, "r": 1, "nus": [0, 0]}')['agreement'], True)
		code, _, _ = self.run_cli('check', 'laplacian', '{"delta_y": 1, "delta_x": 1, "r": 1, "nus": [1, 0]}')
		self.assertEqual(code, EXIT_DISAGREEMENT)

	def test_height_from_data(self):
		data = {'direction': {'d': 2, 'sigma': 1, 'val_a': '1'}, 'u': '1/4', 'rank': 1, 'h_E': '3', 'h_F': '8'}
		payload = self.run_json('check', 'height', json.dumps(data))
		self.assertEqual(payload, {'h_E': '3', 'observed': '8', 'predicted': '8', 'agreement': True})

	def test_height_from_the_engine(self):
		"""Inseparable family with different rho, trivial connection of rank 2."""
		family = self.run_json('gen', 'family', 'inseparable', '-p', '2', '--nu', '1')
		data = {
			'direction': {'d': 2, 'sigma': 2, 'val_a': '0'},
			'u': '1/3',
			'family': family,
			'model': {'components': [['0', 0], ['1', 0]]},
		}
		payload = self.run_json('check', 'height', json.dumps(data))
		self.assertEqual(payload, {'h_E': '1', 'observed': '10/3', 'predicted': '10/3', 'agreement': True})

	def test_bound(self):
		payload = self.run_json('check', 'bound', '{"g": 0, "gamma_size": 3, "i": 2, "delta_i": 2, "equality_expected": true}')
		self.assertEqual(payload['bound'], 2)
		self.assertIs(payload['hypothesis_verified'], False)
		code, _, _ = self.run_cli('check', 'bound', '{"g": 1, "gamma_size": 2, "i": 1, "delta_i": 3}')
		self.assertEqual(code, EXIT_DISAGREEMENT)

	def test_validate_name(self):
		out = StringIO()
		call_command('validate', 'rh', '{"g_y": 0, "g_x": 0, "d": 1}', stdout=out)
		self.assertIs(json.loads(out.getvalue())['agreement'], True)


class OracleCommandTests(CommandTestCase):

	def test_small_corpus(self):
		payload = self.run_json('oracle', '--count', '12', '--shards', '3', '--seed', '5')
		self.assertEqual(payload['checked'], 12)
		self.assertEqual(payload['shards'], 3)
		self.assertEqual(payload['failures'], [])
		self.assertIs(payload['agreement'], True)


F2 = '{"breaks": ["1"], "slopes": ["2", "1"]}'

REPORTS = (
	('pushforward', 'radii', FIBER, '--oracle', '--phi'),
	('profile', 'compose', F2, '{"breaks": ["1/2"], "slopes": ["3", "1"]}'),
	('profile', 'n-function', F2),
	('pushforward', 'constant', '{"breaks": ["1/2"], "slopes": ["3", "1"]}', '--sep', '1'),
	('herbrand', 'jumps', F2),
	('polygon', '{"logvalues": ["7/3", "1/2", "0"]}'),
	('irregularity', '{"components": [["0", 1], ["2", 0]]}'),
	('gen', 'family', 'inseparable', '-p', '3', '--nu', '1'),
	('check', 'height', '{"direction": {"d": 2, "sigma": 1, "val_a": "1"}, "u": "1/4", "rank": 1, "h_E": "3", "h_F": "8"}'),
)


def leaves(value):
	if isinstance(value, dict):
		value = list(value.values())
	if isinstance(value, list):
		return [leaf for item in value for leaf in leaves(item)]
	return [value]


class OutputFormatTests(CommandTestCase):

	def test_json_output_round_trips(self):
		for argv in REPORTS:
			with self.subTest(command=argv[:2]):
				code, out, err = self.run_cli(*argv)
				self.assertEqual(code, EXIT_OK, err)
				self.assertEqual(render_json(json.loads(out)), out.strip())

	def test_table_carries_the_json_strings(self):
		for argv in REPORTS:
			with self.subTest(command=argv[:2]):
				payload = self.run_json(*argv)
				code, table, _ = self.run_cli(*argv, '--format', 'table')
				self.assertEqual(code, EXIT_OK)
				tokens = table.split()
				for leaf in leaves(payload):
					if isinstance(leaf, str):
						self.assertIn(leaf, tokens)

	def test_pushforward_output_feeds_the_polygon(self):
		code, out, _ = self.run_cli('pushforward', 'radii', FIBER)
		self.assertEqual(code, EXIT_OK)
		payload = self.run_json('polygon', '-', stdin=StringIO(out))
		self.assertEqual(payload['height'], '8')


class RenderTableTests(SimpleTestCase):

	def test_nested_payload(self):
		table = render_table({'logvalues': ['4', '4'], 'profile': {'rank': 2}, 'agreement': True})
		self.assertEqual(table.splitlines(), [
			'logvalues     4  4',
			'profile.rank  2',
			'agreement     true',
		])


class SettingsTests(SimpleTestCase):

	def test_nothing_is_persisted(self):
		self.assertEqual(connections['default'].settings_dict['ENGINE'], 'django.db.backends.dummy')
		self.assertFalse(apps.is_installed('django.contrib.auth'))
		self.assertFalse(apps.is_installed('django.contrib.contenttypes'))
