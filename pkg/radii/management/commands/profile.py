from radii.cli import RadiiCommand
from radii.morphism import n_function
from radii.pwm import (
    LEFT,
    RIGHT,
    as_logvalue,
    degrees_at,
    format_rational,
    profile_from_series,
    pwm_compose,
    pwm_eval,
    pwm_inverse,
    pwm_mul,
    pwm_pow,
)
from radii.serializers import (
    MorphismProfileSerializer,
    NDataSerializer,
    PiecewiseMonomialSerializer,
    SeriesValuationsSerializer,
)


class Command(RadiiCommand):
    help = 'Build, compose, invert and evaluate profile functions'

    def add_arguments(self, parser):
        actions = parser.add_subparsers(dest='action', required=True)
        self.add_action(actions, 'from-series', 'valuation polygon of a series', 'series')
        self.add_action(actions, 'compose', 'outer o inner', 'outer', 'inner')
        self.add_action(actions, 'invert', 'inverse of a bijective profile', 'pwm')
        self.add_action(actions, 'pow', 'n-th power', 'pwm').add_argument('--n', type=int, required=True)
        self.add_action(actions, 'mul', 'pointwise product', 'f', 'h')
        self.add_action(actions, 'n-function', 'N-function of a morphism profile', 'profile')
        self.add_action(actions, 'eval', 'value at a log-value', 'pwm').add_argument('--at', required=True)
        degrees = self.add_action(actions, 'degrees', 'left and right degrees at a log-value', 'pwm')
        degrees.add_argument('--at', required=True)

    def dispatch(self, options):
        action = options['action']
        if action == 'from-series':
            sv = self.load(options['series'], SeriesValuationsSerializer)
            return PiecewiseMonomialSerializer(profile_from_series(sv)).data
        if action == 'compose':
            outer = self.load(options['outer'], PiecewiseMonomialSerializer)
            inner = self.load(options['inner'], PiecewiseMonomialSerializer)
            return PiecewiseMonomialSerializer(pwm_compose(outer, inner)).data
        if action == 'invert':
            f = self.load(options['pwm'], PiecewiseMonomialSerializer)
            return PiecewiseMonomialSerializer(pwm_inverse(f)).data
        if action == 'pow':
            f = self.load(options['pwm'], PiecewiseMonomialSerializer)
            return PiecewiseMonomialSerializer(pwm_pow(f, options['n'])).data
        if action == 'mul':
            f = self.load(options['f'], PiecewiseMonomialSerializer)
            h = self.load(options['h'], PiecewiseMonomialSerializer)
            return PiecewiseMonomialSerializer(pwm_mul(f, h)).data
        if action == 'n-function':
            mp = self.load(options['profile'], MorphismProfileSerializer)
            return NDataSerializer(n_function(mp)).data

        f = self.load(options['pwm'], PiecewiseMonomialSerializer)
        at = as_logvalue(options['at'])
        if action == 'eval':
            return {'at': format_rational(at), 'value': format_rational(pwm_eval(f, at))}
        return {
            'at': format_rational(at),
            'left': format_rational(degrees_at(f, at, LEFT)),
            'right': format_rational(degrees_at(f, at, RIGHT)),
        }
