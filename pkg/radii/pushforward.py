"""Pushforward of radii of convergence along finite etale morphisms.

Every route here is exact: the closed form assembled from F-families,
the brute-force count of solutions Phi over candidate radii, and the
product formula on equation profiles. `cross_check` runs all three.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction

from .connection import (
	DirectionModel,
	EquationProfile,
	MultiRadius,
	direction_at,
	equation_profile,
	instantiate_family,
	polygon,
)
from .exceptions import InvalidMultiRadius, NotEtale, RadiiError
from .morphism import FiberConfiguration, FiberPoint, n_function
from .pwm import PiecewiseMonomial, as_rational, check_prime, pwm_compose, pwm_inverse, pwm_mul, pwm_pow

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PhiTable:
	"""Rows (s, Phi(s), Phi(s+)) by decreasing radius, starting at radius 1."""
	rows: tuple
	rank: int
	degree: int

	def multiplicities(self):
		return [(s, phi - phi_plus) for s, phi, phi_plus in self.rows if phi > phi_plus]


@dataclass(frozen=True)
class BoundReport:
	bound: int
	delta_i: int
	satisfied: bool
	equality: bool
	equality_expected: bool
	hypothesis_verified: bool = False

	@property
	def passed(self):
		return self.satisfied and (self.equality or not self.equality_expected)


def _require_etale(profile):
	if not profile.etale:
		raise NotEtale(f'{profile.pwm}: pushforward needs an etale profile')


def _family(profile, steps, v):
	w = profile(v)
	# m = #{j : s_j < f(R)} counted in radii
	m = sum(1 for s, _ in steps if s > w)
	out = []
	for j in range(m):
		out.extend([steps[j][0]] * (steps[j][1] - steps[j + 1][1]))
	out.extend([w] * steps[m][1])
	return out


def f_family(fp, R):
	R = as_rational(R)
	return MultiRadius.from_multiset(_family(fp.profile, n_function(fp.profile).steps, R))


def pushforward_radii_disc(mp, mr):
	_require_etale(mp)
	steps = n_function(mp).steps
	values = []
	for v in mr:
		values.extend(_family(mp, steps, v))
	return MultiRadius.from_multiset(values)


def pushforward_radii(fc):
	fc.require_etale()
	values = []
	for point in fc.points:
		steps = n_function(point.profile).steps
		for v in point.radii:
			values.extend(_family(point.profile, steps, v) * point.sep_degree)
	logger.debug('pushed %d points of rank %d to %d radii', len(fc.points), fc.rank, len(values))
	return MultiRadius.from_multiset(values)


def _phi(fc, ndata, w):
	total = 0
	for point, nd in zip(fc.points, ndata):
		reached = sum(1 for v in point.radii if point.profile(v) <= w)
		total += point.sep_degree * nd.count_at(w) * reached
	return total


def phi_table(fc):
	fc.require_etale()
	ndata = [n_function(point.profile) for point in fc.points]
	candidates = {Fraction(0)}
	for point, nd in zip(fc.points, ndata):
		candidates.update(nd.breaks)
		candidates.update(point.profile(v) for v in point.radii)
	candidates = sorted(candidates)
	values = [_phi(fc, ndata, w) for w in candidates]
	rows = tuple(
		(w, phi, values[k - 1] if k else 0)
		for k, (w, phi) in enumerate(zip(candidates, values))
	)
	logger.debug('phi table with %d candidates', len(rows))
	return PhiTable(rows, fc.rank, fc.degree)


def pushforward_radii_bruteforce(fc):
	table = phi_table(fc)
	values = [row[1] for row in table.rows]
	if any(b < a for a, b in zip(values, values[1:])):
		raise RadiiError('Phi increases with the radius')
	if values[-1] != table.rank * table.degree:
		raise RadiiError(f'Phi at the smallest candidate is {values[-1]}, expected {table.rank * table.degree}')
	out = []
	for s, count in table.multiplicities():
		out.extend([s] * count)
	return MultiRadius.from_multiset(out)


def constant_pushforward(mp, sep):
	_require_etale(mp)
	steps = n_function(mp).steps
	values = []
	for (s, n), (_, n_next) in zip(steps, steps[1:]):
		values.extend([s] * (n - n_next))
	values.append(Fraction(0))
	return MultiRadius.from_multiset(values * sep)


def constant_pushforward_profile(fp):
	_require_etale(fp.profile)
	n = fp.multiplicity
	return EquationProfile.build(pwm_pow(pwm_inverse(fp.profile.pwm), n), n)


def pushforward_profile(fc):
	fc.require_etale()
	total = PiecewiseMonomial.zero()
	for point in fc.points:
		local = pwm_compose(equation_profile(point.radii).pwm, pwm_inverse(point.profile.pwm))
		total = pwm_mul(total, pwm_pow(local, point.multiplicity))
	return EquationProfile.build(total, fc.rank * fc.degree)


def special_tame(mr, d):
	if d < 1:
		raise ValueError(f'degree must be positive, got {d}')
	return MultiRadius.from_multiset([v for v in mr for _ in range(d)])


def special_inseparable_p(mr, p, val_delta):
	"""Closed form for a residually inseparable degree-p point.

	Radii at or below the profile break delta^(1/(p-1)) become p copies
	of delta R; the rest become R^p, together with (p-1) copies each of
	delta^(p/(p-1)).
	"""
	p = check_prime(p)
	val_delta = as_rational(val_delta)
	if val_delta <= 0:
		raise ValueError(f'the different must be below 1, got log-value {val_delta}')
	cut = val_delta / (p - 1)
	low = [v for v in mr if v >= cut]
	high = [v for v in mr if v < cut]
	values = [v + val_delta for v in low for _ in range(p)]
	values.extend([p * cut] * ((p - 1) * len(high)))
	values.extend(p * v for v in high)
	return MultiRadius.from_multiset(values)


def special_frobenius(mr, p):
	return special_inseparable_p(mr, p, 1)


def pushforward_height(direction, r, h_E, u):
	"""Height of the pushforward along a branch, in log_p units."""
	d, u = direction.d, as_rational(u)
	return d * as_rational(h_E) + r * direction.nu * d * u + r * d * direction.val_a


def pushforward_irregularity(irr_E, r, nu):
	return irr_E + r * nu


def laplacian_pushforward_check(delta_y, delta_x, r, nus):
	"""Delta_x(F) = Delta_y(E) + r sum(nu), the branch irregularities summed over Gamma."""
	return delta_x == delta_y + r * sum(nus)


def laplacian_bound_check(g, gamma_size, i, delta_i, equality_expected=False):
	"""Validate Delta_i <= (2g - 2 + #Gamma) i for caller-supplied data.

	Whether Gamma contains the controlling graph is not checked, and the
	report says so.
	"""
	if g < 0 or gamma_size < 2 or i < 1:
		raise ValueError('need g >= 0, #Gamma >= 2 and i >= 1')
	bound = (2 * g - 2 + gamma_size) * i
	return BoundReport(
		bound=bound,
		delta_i=delta_i,
		satisfied=delta_i <= bound,
		equality=delta_i == bound,
		equality_expected=equality_expected,
	)


def herbrand_multiradius(rd):
	values = [Fraction(0)]
	for (v, index), following in zip(rd.jumps, rd.indices[1:]):
		values.extend([v] * (following - index))
	return MultiRadius.from_multiset(values)


def fiber_along_direction(family, dm, sep, u):
	profile = instantiate_family(family, u)
	point = FiberPoint('branch', profile, sep, direction_at(dm, u))
	return FiberConfiguration.build([point], dm.rank)


def fit_direction_model(samples, scale=1):
	"""Affine germ of multiradii sampled at increasing u, in units u' = scale u."""
	samples = sorted(((as_rational(u), mr) for u, mr in samples), key=lambda sample: sample[0])
	if len(samples) < 2:
		raise InvalidMultiRadius('fitting a direction needs at least two samples')
	(u0, first), (u1, second) = samples[0], samples[1]
	if u0 == u1:
		raise InvalidMultiRadius(f'duplicate sample at u = {u0}')
	components = []
	for a, b in zip(first, second):
		slope = (b - a) / (scale * (u1 - u0))
		if slope.denominator != 1:
			raise InvalidMultiRadius(f'slope {slope} of a radius is not an integer')
		components.append((a - slope * scale * u0, slope))
	for u, mr in samples[2:]:
		expected = sorted((c + m * scale * u for c, m in components), reverse=True)
		if list(mr) != expected:
			raise InvalidMultiRadius(f'samples are not affine in u (at u = {u})')
	return DirectionModel.build(components)


def pushforward_direction(family, direction, dm, sep, samples):
	pushed = [(u, pushforward_radii(fiber_along_direction(family, dm, sep, u))) for u in samples]
	return fit_direction_model(pushed, direction.d)


def cross_check(fc):
	"""Closed form, brute force and profile routes on one configuration."""
	radii = pushforward_radii(fc)
	brute = pushforward_radii_bruteforce(fc)
	profile = pushforward_profile(fc)
	agreement = radii == brute and equation_profile(radii) == profile
	if not agreement:
		logger.warning('pushforward routes disagree: %s / %s / %s', list(radii), list(brute), profile.pwm)
	return {
		'radii': radii,
		'bruteforce': brute,
		'profile': profile,
		'agreement': agreement,
	}


def height(mr):
	return polygon(mr).height

