from radii.cli import RadiiCommand
from radii.connection import direction_at, polygon
from radii.morphism import riemann_hurwitz_check
from radii.pushforward import (
    fiber_along_direction,
    laplacian_bound_check,
    laplacian_pushforward_check,
    pushforward_height,
    pushforward_radii,
)
from radii.pwm import format_rational
from radii.serializers import (
    BoundCheckSerializer,
    HeightCheckSerializer,
    LaplacianCheckSerializer,
    RiemannHurwitzSerializer,
)


class Command(RadiiCommand):
    help = 'Validate Riemann-Hurwitz, Laplacian and height identities (the "check" group)'

    def add_arguments(self, parser):
        actions = parser.add_subparsers(dest='action', required=True)
        self.add_action(actions, 'rh', 'Riemann-Hurwitz formula at a point', 'data')
        self.add_action(actions, 'laplacian', 'Laplacian of the pushforward', 'data')
        self.add_action(actions, 'height', 'height of the pushforward along a branch', 'data')
        self.add_action(actions, 'bound', 'bound on a partial Laplacian', 'data')

    def dispatch(self, options):
        return getattr(self, f"check_{options['action']}")(options['data'])

    def check_rh(self, source):
        data = self.load(source, RiemannHurwitzSerializer)
        branches = [tuple(branch) for branch in data['branches']]
        return {
            'lhs': 2 * data['g_y'] - 2,
            'rhs': data['d'] * (2 * data['g_x'] - 2) + sum(nu + d_t - 1 for nu, d_t in branches),
            'agreement': riemann_hurwitz_check(data['g_y'], data['g_x'], data['d'], branches),
        }

    def check_laplacian(self, source):
        data = self.load(source, LaplacianCheckSerializer)
        return {
            'delta_x': data['delta_x'],
            'predicted': data['delta_y'] + data['r'] * sum(data['nus']),
            'agreement': laplacian_pushforward_check(data['delta_y'], data['delta_x'], data['r'], data['nus']),
        }

    def check_height(self, source):
        data = self.load(source, HeightCheckSerializer)
        direction, u = data['direction'], data['u']
        if 'model' in data:
            model = data['model']
            rank = model.rank
            h_E = polygon(direction_at(model, u)).height
            fiber = fiber_along_direction(data['family'], model, data['sep'], u)
            h_F = polygon(pushforward_radii(fiber)).height
        else:
            rank, h_E, h_F = data['rank'], data['h_E'], data['h_F']
        predicted = pushforward_height(direction, rank, h_E, u)
        return {
            'h_E': format_rational(h_E),
            'observed': format_rational(h_F),
            'predicted': format_rational(predicted),
            'agreement': h_F == predicted,
        }

    def check_bound(self, source):
        data = self.load(source, BoundCheckSerializer)
        report = laplacian_bound_check(**data)
        return {
            'bound': report.bound,
            'delta_i': report.delta_i,
            'satisfied': report.satisfied,
            'equality': report.equality,
            'equality_expected': report.equality_expected,
            'hypothesis_verified': report.hypothesis_verified,
            'agreement': report.passed,
        }
