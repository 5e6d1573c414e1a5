"""Shared plumbing for the radii management commands.

Every command reads its input from a file path, inline JSON or "-" for
stdin, validates it with a serializer, and renders the whole report in
memory before writing it, so a failing run prints nothing to stdout.
"""
import contextlib
import io
import os
import sys

import django
from django.conf import settings
from django.core.management import call_command
from django.core.management.base import BaseCommand, CommandError
from rest_framework.exceptions import ParseError
from rest_framework.parsers import JSONParser
from rest_framework.renderers import JSONRenderer
from sympy import isprime

from .serializers import error_pointers

COMMANDS = ('profile', 'pushforward', 'herbrand', 'polygon', 'irregularity', 'validate', 'gen', 'oracle')
# Django ships its own `check` command
ALIASES = {'check': 'validate'}

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_DISAGREEMENT = 2

USAGE = (
	'usage: radii {profile,pushforward,herbrand,polygon,irregularity,check,gen,oracle} ...\n'
	'Run "radii <command> --help" for the options of a command.\n'
)


def read_json(source, stdin=None):
	if source == '-':
		text = (stdin or sys.stdin).read()
	elif source.lstrip().startswith(('{', '[')):
		text = source
	else:
		try:
			with open(source, encoding='utf-8') as fh:
				text = fh.read()
		except OSError as exc:
			raise CommandError(f'{source}: {exc.strerror}', returncode=EXIT_INVALID)
	try:
		return JSONParser().parse(io.BytesIO(text.encode('utf-8')))
	except ParseError as exc:
		raise CommandError(f'{source}: {exc.detail}', returncode=EXIT_INVALID)


def render_json(payload):
	return JSONRenderer().render(payload).decode('utf-8')


def _cell(value):
	if isinstance(value, bool):
		return 'true' if value else 'false'
	if value is None:
		return '-'
	return str(value)


def _rows(value, key):
	if isinstance(value, dict):
		for name, item in value.items():
			yield from _rows(item, f'{key}.{name}' if key else name)
	elif isinstance(value, list) and any(isinstance(item, (list, dict)) for item in value):
		for index, item in enumerate(value):
			yield from _rows(item, f'{key}[{index}]')
	elif isinstance(value, list):
		yield key, '  '.join(_cell(item) for item in value) if value else '[]'
	else:
		yield key, _cell(value)


def render_table(payload):
	"""Fixed-width key/value rows carrying the same rational strings as JSON."""
	rows = list(_rows(payload, ''))
	if not rows:
		return ''
	width = max(len(key) for key, _ in rows)
	return '\n'.join(f'{key:<{width}}  {value}'.rstrip() for key, value in rows)


class RadiiCommand(BaseCommand):
	"""Base class: subclasses implement `dispatch(options)` returning a payload dict.

	A payload with `"agreement": false` is written and then turned into
	exit code 2.
	"""
	stealth_options = ('stdin',)
	requires_system_checks = []

	def add_common_arguments(self, parser):
		parser.add_argument('--format', choices=('json', 'table'), default=settings.RADII['DEFAULT_FORMAT'])
		parser.add_argument('--base', type=int, help='read radius literals such as "1/4" as powers of this prime')

	def add_action(self, actions, name, summary, *inputs):
		parser = actions.add_parser(name, help=summary)
		for field in inputs:
			parser.add_argument(field, help='JSON file, inline JSON or - for stdin')
		self.add_common_arguments(parser)
		return parser

	def load(self, source, serializer_class):
		serializer = serializer_class(
			data=read_json(source, self.options.get('stdin')),
			context={'base': self.options.get('base')},
		)
		if not serializer.is_valid():
			raise CommandError('\n'.join(error_pointers(serializer.errors)), returncode=EXIT_INVALID)
		return serializer.validated_data

	def dispatch(self, options):
		raise NotImplementedError

	def handle(self, *args, **options):
		self.options = options
		base = options.get('base')
		if base is not None and not isprime(base):
			raise CommandError(f'--base {base} is not a prime', returncode=EXIT_INVALID)
		try:
			payload = self.dispatch(options)
		except ValueError as exc:
			raise CommandError(str(exc), returncode=EXIT_INVALID)
		if options.get('format') == 'table':
			output = render_table(payload)
		else:
			output = render_json(payload)
		if payload.get('agreement') is False:
			self.stdout.write(output)
			raise CommandError('results disagree', returncode=EXIT_DISAGREEMENT)
		return output


def run(argv=None, stdout=None, stderr=None, stdin=None):
	"""Run one radii command and return its exit code."""
	argv = list(sys.argv[1:] if argv is None else argv)
	stdout = stdout or sys.stdout
	stderr = stderr or sys.stderr
	if not argv:
		stderr.write(USAGE)
		return EXIT_INVALID
	if argv[0] in ('-h', '--help'):
		stdout.write(USAGE)
		return EXIT_OK
	name = ALIASES.get(argv[0], argv[0])
	if name not in COMMANDS:
		stderr.write(f'unknown command {argv[0]!r}\n{USAGE}')
		return EXIT_INVALID
	extra = {'stdin': stdin} if stdin is not None else {}
	# argparse prints subcommand help to sys.stdout
	try:
		with contextlib.redirect_stdout(stdout):
			call_command(name, *argv[1:], stdout=stdout, stderr=stderr, **extra)
	except CommandError as exc:
		stderr.write(f'{exc}\n')
		return exc.returncode
	except SystemExit as exc:
		return exc.code or EXIT_OK
	return EXIT_OK


def main():
	os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'core.settings')
	django.setup()
	sys.exit(run())
