from radii.cli import RadiiCommand
from radii.pushforward import (
    constant_pushforward,
    cross_check,
    phi_table,
    pushforward_profile,
    pushforward_radii,
    pushforward_radii_disc,
    special_frobenius,
    special_inseparable_p,
    special_tame,
)
from radii.pwm import as_rational
from radii.serializers import (
    EquationProfileSerializer,
    FiberConfigurationSerializer,
    MorphismProfileSerializer,
    MultiRadiusSerializer,
    PhiTableSerializer,
)


class Command(RadiiCommand):
    help = 'Push radii of convergence forward along a finite etale morphism'

    def add_arguments(self, parser):
        actions = parser.add_subparsers(dest='action', required=True)
        radii = self.add_action(actions, 'radii', 'multiradius of the pushforward at x', 'fiber')
        radii.add_argument('--oracle', action='store_true', help='also run the Phi and profile routes')
        radii.add_argument('--phi', action='store_true', help='include the Phi audit table')
        self.add_action(actions, 'profile', 'equation profile of the pushforward at x', 'fiber')
        constant = self.add_action(actions, 'constant', 'pushforward of the trivial connection', 'profile')
        constant.add_argument('--sep', type=int, default=1)
        self.add_action(actions, 'disc', 'pushforward along a radial disc morphism', 'profile', 'multiradius')
        special = self.add_action(actions, 'special', 'closed forms for tame and degree-p points', 'multiradius')
        special.add_argument('kind', choices=('tame', 'frobenius', 'inseparable'))
        special.add_argument('-d', type=int, default=1)
        special.add_argument('-p', type=int)
        special.add_argument('--delta', help='log-value of the different')

    def dispatch(self, options):
        action = options['action']
        if action == 'radii':
            return self.radii(options)
        if action == 'profile':
            fc = self.load(options['fiber'], FiberConfigurationSerializer)
            return EquationProfileSerializer(pushforward_profile(fc)).data
        if action == 'constant':
            mp = self.load(options['profile'], MorphismProfileSerializer)
            if options['sep'] < 1:
                raise ValueError('--sep must be positive')
            return MultiRadiusSerializer(constant_pushforward(mp, options['sep'])).data
        if action == 'disc':
            mp = self.load(options['profile'], MorphismProfileSerializer)
            mr = self.load(options['multiradius'], MultiRadiusSerializer)
            return MultiRadiusSerializer(pushforward_radii_disc(mp, mr)).data
        return self.special(options)

    def radii(self, options):
        fc = self.load(options['fiber'], FiberConfigurationSerializer)
        if options['oracle']:
            report = cross_check(fc)
            payload = dict(MultiRadiusSerializer(report['radii']).data)
            payload['bruteforce'] = MultiRadiusSerializer(report['bruteforce']).data['logvalues']
            payload['profile'] = EquationProfileSerializer(report['profile']).data
            payload['agreement'] = report['agreement']
        else:
            payload = dict(MultiRadiusSerializer(pushforward_radii(fc)).data)
        if options['phi']:
            payload['phi'] = PhiTableSerializer(phi_table(fc)).data['candidates']
        return payload

    def special(self, options):
        mr = self.load(options['multiradius'], MultiRadiusSerializer)
        kind = options['kind']
        if kind == 'tame':
            result = special_tame(mr, options['d'])
        elif options['p'] is None:
            raise ValueError(f'{kind} needs -p')
        elif kind == 'frobenius':
            result = special_frobenius(mr, options['p'])
        elif options['delta'] is None:
            raise ValueError('inseparable needs --delta')
        else:
            result = special_inseparable_p(mr, options['p'], as_rational(options['delta']))
        return MultiRadiusSerializer(result).data
