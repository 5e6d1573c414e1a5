from radii.cli import RadiiCommand
from radii.morphism import herbrand_jumps
from radii.pushforward import herbrand_multiradius
from radii.serializers import MorphismProfileSerializer, MultiRadiusSerializer, RamificationDataSerializer


class Command(RadiiCommand):
    help = 'Upper ramification jumps of a profile and the radii they induce'

    def add_arguments(self, parser):
        actions = parser.add_subparsers(dest='action', required=True)
        self.add_action(actions, 'jumps', 'jumps read off the N-function of an etale profile', 'profile')
        self.add_action(actions, 'radii', 'multiradius of the trivial connection pushed forward', 'ramification')

    def dispatch(self, options):
        if options['action'] == 'jumps':
            mp = self.load(options['profile'], MorphismProfileSerializer)
            return RamificationDataSerializer(herbrand_jumps(mp)).data
        rd = self.load(options['ramification'], RamificationDataSerializer)
        return MultiRadiusSerializer(herbrand_multiradius(rd)).data
