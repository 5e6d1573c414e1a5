from radii.cli import RadiiCommand
from radii.connection import irregularity, partial_irregularity
from radii.serializers import DirectionModelSerializer


class Command(RadiiCommand):
    help = 'Irregularity of a connection along a branch'

    def add_arguments(self, parser):
        parser.add_argument('direction', help='JSON file, inline JSON or - for stdin')
        self.add_common_arguments(parser)

    def dispatch(self, options):
        dm = self.load(options['direction'], DirectionModelSerializer)
        return {
            'irregularity': irregularity(dm),
            'partial': [partial_irregularity(dm, i) for i in range(1, dm.rank + 1)],
        }
