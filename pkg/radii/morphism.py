"""Morphism-side data: profiles, N-functions, fibers and ramification."""
from dataclasses import dataclass
from fractions import Fraction

from sympy import isprime

from .connection import MultiRadius
from .exceptions import InvalidProfile, NotEtale, OutOfRegime
from .pwm import PiecewiseMonomial, as_rational, check_prime, profile_from_series


@dataclass(frozen=True)
class MorphismProfile:
	"""Profile of a radial disc morphism.

	Log-side slopes are the radius-side degrees read from radius 1
	downward: positive integers, strictly decreasing in canonical form,
	each dividing the top degree.
	"""
	pwm: PiecewiseMonomial
	degree: int
	etale: bool = True

	@classmethod
	def build(cls, pwm, etale=True):
		slopes = pwm.slopes
		if any(s <= 0 or s.denominator != 1 for s in slopes):
			raise InvalidProfile(f'{pwm}: degrees must be positive integers')
		if any(b >= a for a, b in zip(slopes, slopes[1:])):
			raise InvalidProfile(f'{pwm}: radius-side degrees must increase toward radius 1')
		degree = int(slopes[0])
		if any(degree % int(s) for s in slopes):
			raise InvalidProfile(f'{pwm}: every degree must divide the top degree {degree}')
		if etale and slopes[-1] != 1:
			raise InvalidProfile(f'{pwm}: an etale profile has degree 1 near radius 0')
		return cls(pwm, degree, etale)

	def __call__(self, v):
		return self.pwm(v)

	@property
	def breaks(self):
		return self.pwm.breaks

	@property
	def slopes(self):
		return self.pwm.slopes


@dataclass(frozen=True)
class NData:
	"""Steps (s_j, n_j) of the N-function, s_1 < ... < s_n = 1.

	Stored by log-value, so `steps[0]` has the largest log-value and
	`steps[-1]` is (0, 1).
	"""
	steps: tuple

	@property
	def breaks(self):
		return [s for s, _ in self.steps]

	def count_at(self, w):
		"""N at the radius with log-value w (left-continuous in the radius)."""
		for s, n in self.steps:
			if s <= w:
				return n
		raise AssertionError('N-function steps must end at radius 1')


def n_function(mp):
	f = mp.pwm
	steps = [(value, mp.degree // int(slope)) for value, slope in zip(f.values, f.slopes[1:])]
	steps.reverse()
	steps.append((Fraction(0), 1))
	return NData(tuple(steps))


@dataclass(frozen=True)
class FiberPoint:
	label: str
	profile: MorphismProfile
	sep_degree: int
	radii: MultiRadius

	def __post_init__(self):
		if self.sep_degree < 1:
			raise InvalidProfile(f'{self.label}: separable degree must be positive')

	@property
	def insep_degree(self):
		return self.profile.degree

	@property
	def multiplicity(self):
		return self.sep_degree * self.insep_degree


@dataclass(frozen=True)
class FiberConfiguration:
	points: tuple
	rank: int

	@classmethod
	def build(cls, points, rank):
		points = tuple(points)
		if not points:
			raise InvalidProfile('a fiber has at least one point')
		if rank < 1:
			raise InvalidProfile(f'rank must be positive, got {rank}')
		for point in points:
			if point.radii.rank != rank:
				raise InvalidProfile(f'{point.label}: {point.radii.rank} radii for a rank {rank} connection')
		return cls(points, rank)

	@property
	def degree(self):
		return sum(point.multiplicity for point in self.points)

	def require_etale(self):
		for point in self.points:
			if not point.profile.etale:
				raise NotEtale(f'{point.label}: profile is not flagged etale')


@dataclass(frozen=True)
class AnnulusDirection:
	"""Branch data phi'(T) = a T^sigma (1 + ...) of a degree-d annulus map."""
	d: int
	sigma: int
	val_a: Fraction

	def __post_init__(self):
		if self.d < 1:
			raise ValueError(f'branch degree must be positive, got {self.d}')
		if self.val_a < 0:
			raise ValueError(f'|a| must be at most 1, got log-value {self.val_a}')

	@property
	def nu(self):
		return self.sigma - self.d + 1


@dataclass(frozen=True)
class RamificationData:
	"""Upper ramification jumps (v_j, (G:G^{v_j})) by decreasing radius."""
	degree: int
	jumps: tuple

	@classmethod
	def build(cls, degree, jumps):
		jumps = tuple((as_rational(v), int(index)) for v, index in jumps)
		if degree < 1:
			raise ValueError(f'extension degree must be positive, got {degree}')
		if not jumps and degree != 1:
			raise ValueError('a nontrivial extension has at least one jump')
		values = [v for v, _ in jumps]
		indices = [index for _, index in jumps] + [degree]
		if any(v <= 0 for v in values):
			raise ValueError('jumps are radii strictly below 1')
		if any(b <= a for a, b in zip(values, values[1:])):
			raise ValueError('jumps must be listed by decreasing radius')
		if any(b <= a for a, b in zip(indices, indices[1:])):
			raise ValueError('filtration indices must increase as the jumps decrease')
		if jumps and indices[0] != 1:
			raise ValueError('the index above the first jump must be 1')
		return cls(degree, jumps)

	@property
	def indices(self):
		return tuple(index for _, index in self.jumps) + (self.degree,)


def series_profile(sv, etale=True):
	return MorphismProfile.build(profile_from_series(sv), etale=etale)


def frobenius_profile(p):
	p = check_prime(p)
	return MorphismProfile.build(PiecewiseMonomial.build([Fraction(1, p - 1)], [p, 1]))


def off_centered_frobenius_profile(p, val_a, u):
	"""Profile of x -> (x + a)^p - a^p at the point of radius p^-u."""
	p = check_prime(p)
	val_a, u = as_rational(val_a), as_rational(u)
	if val_a < 0 or u < 0:
		raise OutOfRegime('val_a and u must be nonnegative')
	if u <= val_a:
		return frobenius_profile(p)
	if u >= val_a + Fraction(1, p - 1):
		raise OutOfRegime(f'rho <= |a||p|^(1/(p-1)) (u = {u}): the profile is not a bijection of radii')
	cut = Fraction(1, p - 1) + val_a - u
	return MorphismProfile.build(PiecewiseMonomial.build([cut], [p, 1]))


def tame_profile():
	return MorphismProfile.build(PiecewiseMonomial.identity())


def inseparable_p_profile(p, val_delta):
	"""Residually purely inseparable degree-p profile with different delta."""
	p = check_prime(p)
	val_delta = as_rational(val_delta)
	if val_delta < 0:
		raise OutOfRegime(f'the different is at most 1, got log-value {val_delta}')
	if val_delta == 0:
		return MorphismProfile.build(PiecewiseMonomial.monomial(p), etale=False)
	return MorphismProfile.build(PiecewiseMonomial.build([val_delta / (p - 1)], [p, 1]))


def different_from_profile(mp):
	slopes = mp.pwm.slopes
	if len(slopes) != 2 or slopes[1] != 1 or not isprime(int(slopes[0])):
		raise InvalidProfile(f'{mp.pwm} is not a residually inseparable degree-p profile')
	return (slopes[0] - 1) * mp.pwm.breaks[0]


def disc_coefficient_valuation(direction, u):
	"""Log-value of |a_1| = |a| rho^nu, the different along the branch."""
	return direction.val_a + direction.nu * as_rational(u)


def herbrand_jumps(mp):
	if not mp.etale:
		raise NotEtale(f'{mp.pwm}: upper ramification needs an etale profile')
	steps = n_function(mp).steps
	# the jump s_j carries n_{j+1} = (G : G^{s_j})
	jumps = [(s, steps[j + 1][1]) for j, (s, _) in enumerate(steps[:-1])]
	jumps.reverse()
	return RamificationData.build(mp.degree, jumps)


def riemann_hurwitz_check(g_y, g_x, d, branches):
	"""2g_y - 2 = d (2g_x - 2) + sum (nu_t + d_t - 1)."""
	total = sum(nu + d_t - 1 for nu, d_t in branches)
	return 2 * g_y - 2 == d * (2 * g_x - 2) + total
