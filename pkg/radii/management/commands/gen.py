from radii.cli import RadiiCommand
from radii.connection import frobenius_family, inseparable_family, instantiate_family, off_centered_family
from radii.morphism import frobenius_profile, inseparable_p_profile, off_centered_frobenius_profile, tame_profile
from radii.pwm import as_rational
from radii.serializers import PiecewiseMonomialSerializer, ProfileFamilySerializer


def profile_payload(mp):
    payload = dict(PiecewiseMonomialSerializer(mp.pwm).data)
    if not mp.etale:
        payload['etale'] = False
    return payload


class Command(RadiiCommand):
    help = 'Generate the standard profiles and profile families'

    def add_arguments(self, parser):
        actions = parser.add_subparsers(dest='action', required=True)
        self.add_action(actions, 'frobenius', 'x -> x^p').add_argument('-p', type=int, required=True)
        self.add_action(actions, 'tame', 'identity profile')
        inseparable = self.add_action(actions, 'inseparable', 'residually inseparable degree p')
        inseparable.add_argument('-p', type=int, required=True)
        inseparable.add_argument('--delta', required=True, help='log-value of the different')
        off = self.add_action(actions, 'off-frobenius', '(x + a)^p - a^p at radius p^-u')
        off.add_argument('-p', type=int, required=True)
        off.add_argument('--val-a', required=True)
        off.add_argument('--u', required=True)
        family = self.add_action(actions, 'family', 'profile family along a branch')
        family.add_argument('kind', choices=('frobenius', 'off-frobenius', 'inseparable'))
        family.add_argument('-p', type=int, required=True)
        family.add_argument('--val-a', default='0')
        family.add_argument('--nu', type=int, default=1)
        instantiate = self.add_action(actions, 'instantiate', 'profile of a family at u', 'family')
        instantiate.add_argument('--u', required=True)

    def dispatch(self, options):
        action = options['action']
        if action == 'frobenius':
            return profile_payload(frobenius_profile(options['p']))
        if action == 'tame':
            return profile_payload(tame_profile())
        if action == 'inseparable':
            return profile_payload(inseparable_p_profile(options['p'], as_rational(options['delta'])))
        if action == 'off-frobenius':
            mp = off_centered_frobenius_profile(options['p'], as_rational(options['val_a']), as_rational(options['u']))
            return profile_payload(mp)
        if action == 'instantiate':
            family = self.load(options['family'], ProfileFamilySerializer)
            return profile_payload(instantiate_family(family, as_rational(options['u'])))

        p, val_a = options['p'], as_rational(options['val_a'])
        if options['kind'] == 'frobenius':
            family = frobenius_family(p)
        elif options['kind'] == 'off-frobenius':
            family = off_centered_family(p, val_a)
        else:
            family = inseparable_family(p, options['nu'], val_a)
        return ProfileFamilySerializer(family).data
