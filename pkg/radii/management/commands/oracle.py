from django.conf import settings

from radii.cli import RadiiCommand
from radii.tasks import run_oracle


class Command(RadiiCommand):
    help = 'Cross-check the pushforward routes on a seeded random corpus'

    def add_arguments(self, parser):
        config = settings.RADII
        parser.add_argument('--count', type=int, default=config['ORACLE_COUNT'])
        parser.add_argument('--shards', type=int, default=config['ORACLE_SHARDS'])
        parser.add_argument('--seed', type=int, default=config['ORACLE_SEED'])
        self.add_common_arguments(parser)

    def dispatch(self, options):
        if options['count'] < 0 or options['shards'] < 1:
            raise ValueError('--count must be nonnegative and --shards positive')
        report = run_oracle(options['count'], options['shards'], options['seed'])
        if report['agreement'] and options['verbosity'] > 1:
            self.stderr.write(self.style.SUCCESS(f"{report['checked']} configurations agree"))
        return report
