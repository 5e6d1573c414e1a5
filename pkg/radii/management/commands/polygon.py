from radii.cli import RadiiCommand
from radii.connection import polygon
from radii.serializers import ConvergencePolygonSerializer, MultiRadiusSerializer


class Command(RadiiCommand):
    help = 'Convergence polygon and height of a multiradius (log_p units)'

    def add_arguments(self, parser):
        parser.add_argument('multiradius', help='JSON file, inline JSON or - for stdin')
        self.add_common_arguments(parser)

    def dispatch(self, options):
        mr = self.load(options['multiradius'], MultiRadiusSerializer)
        return ConvergencePolygonSerializer(polygon(mr)).data
