"""Connection-side data: multiradii, equation profiles, polygons, families."""
from dataclasses import dataclass
from fractions import Fraction

from .exceptions import InvalidMultiRadius, InvalidProfile, OutOfRegime
from .pwm import INFINITY, PiecewiseMonomial, as_logvalue, as_rational, check_prime, is_infinite


@dataclass(frozen=True)
class MultiRadius:
	"""Radii of convergence R_1 <= ... <= R_r as log-values v_1 >= ... >= v_r."""
	logvalues: tuple

	@classmethod
	def build(cls, logvalues):
		values = tuple(as_logvalue(v) for v in logvalues)
		if not values:
			raise InvalidMultiRadius('a multiradius has at least one entry')
		if any(is_infinite(v) for v in values):
			raise InvalidMultiRadius('radii of convergence are positive')
		if any(b > a for a, b in zip(values, values[1:])):
			raise InvalidMultiRadius(f'log-values must be nonincreasing, got log-values {list(map(str, values))}')
		return cls(values)

	@classmethod
	def from_multiset(cls, logvalues):
		try:
			return cls.build(sorted((as_logvalue(v) for v in logvalues), reverse=True))
		except ValueError as exc:
			raise InvalidMultiRadius(str(exc)) from exc

	@property
	def rank(self):
		return len(self.logvalues)

	def __iter__(self):
		return iter(self.logvalues)


@dataclass(frozen=True)
class EquationProfile:
	pwm: PiecewiseMonomial
	rank: int

	@classmethod
	def build(cls, pwm, rank=None):
		slopes = pwm.slopes
		if any(s < 0 or s.denominator != 1 for s in slopes):
			raise InvalidProfile(f'{pwm}: slopes count radii and must be integers')
		if any(b < a for a, b in zip(slopes, slopes[1:])):
			raise InvalidProfile(f'{pwm}: slopes must not decrease')
		rank = int(slopes[-1]) if rank is None else rank
		if slopes[-1] != rank:
			raise InvalidProfile(f'{pwm}: final slope must equal the rank {rank}')
		return cls(pwm, rank)


@dataclass(frozen=True)
class ConvergencePolygon:
	"""Vertices (i, h_i) with h_i the sum of the i largest log-values."""
	vertices: tuple

	@property
	def height(self):
		return self.vertices[-1][1]


@dataclass(frozen=True)
class DirectionModel:
	"""Log-values v_i(u) = c_i + m_i u near the start of a branch."""
	components: tuple

	@classmethod
	def build(cls, components):
		components = tuple((as_rational(c), int(m)) for c, m in components)
		if not components:
			raise InvalidMultiRadius('a direction model has at least one component')
		for c, m in components:
			if c < 0 or (c == 0 and m < 0):
				raise InvalidMultiRadius(f'component {c} + {m}u is negative for small u > 0')
		# smallest radius just after u = 0 first
		return cls(tuple(sorted(components, reverse=True)))

	@property
	def rank(self):
		return len(self.components)


@dataclass(frozen=True)
class ProfileFamily:
	"""Profiles with breaks beta_j + e_j u and constant slopes on an interval of u.

	`upper` is None for an unbounded interval; it is excluded, `lower` is not.
	"""
	breaks: tuple
	slopes: tuple
	lower: Fraction
	upper: object = None
	etale: bool = True

	@classmethod
	def build(cls, breaks, slopes, lower, upper=None, etale=True):
		breaks = tuple((as_rational(beta), as_rational(e)) for beta, e in breaks)
		slopes = tuple(as_rational(s) for s in slopes)
		lower = as_rational(lower)
		if upper is not None and not is_infinite(upper):
			upper = as_rational(upper)
			if upper <= lower:
				raise ValueError(f'empty interval [{lower}, {upper})')
		else:
			upper = None
		if len(slopes) != len(breaks) + 1:
			raise ValueError(f'{len(breaks)} breaks need {len(breaks) + 1} slopes, got {len(slopes)}')
		return cls(breaks, slopes, lower, upper, etale)

	def contains(self, u):
		return u >= self.lower and (self.upper is None or u < self.upper)


def star(families):
	"""Multiset union of multiradii."""
	families = list(families)
	if not families:
		raise InvalidMultiRadius('star of an empty list')
	return MultiRadius.from_multiset(v for mr in families for v in mr)


def equation_profile(mr):
	"""Radius-side profile of the spectral polygon.

	The slope just above radius ratio v counts the radii R_i with
	v_i <= v, so the first slope is the number of radii equal to 1 and
	the final slope is the rank.
	"""
	breaks = sorted({v for v in mr if v > 0})
	slopes = [sum(1 for v in mr if v <= start) for start in [Fraction(0)] + breaks]
	return EquationProfile.build(PiecewiseMonomial.build(breaks, slopes), mr.rank)


def multiradius_from_profile(ep):
	f = ep.pwm
	values = [Fraction(0)] * int(f.slopes[0])
	for b, before, after in zip(f.breaks, f.slopes, f.slopes[1:]):
		values.extend([b] * int(after - before))
	return MultiRadius.from_multiset(values)


def polygon(mr):
	vertices, acc = [(0, Fraction(0))], Fraction(0)
	for i, v in enumerate(mr, start=1):
		acc += v
		vertices.append((i, acc))
	return ConvergencePolygon(tuple(vertices))


def partial_heights(mr):
	return [h for _, h in polygon(mr).vertices[1:]]


def direction_at(dm, u):
	u = as_rational(u)
	if u < 0:
		raise OutOfRegime(f'u = {u} lies before the start of the branch')
	return MultiRadius.from_multiset(c + m * u for c, m in dm.components)


def partial_irregularity(dm, i):
	"""Slope in u of h_i, the sum of the i largest log-values just after u = 0."""
	if not 1 <= i <= dm.rank:
		raise ValueError(f'index {i} outside 1..{dm.rank}')
	return sum(m for _, m in dm.components[:i])


def irregularity(dm):
	return partial_irregularity(dm, dm.rank)


def laplacian(irregularities):
	return sum(int(irr) for irr in irregularities)


def instantiate_family(pf, u):
	from .morphism import MorphismProfile

	u = as_rational(u)
	if not pf.contains(u):
		raise OutOfRegime(f'u = {u} is outside the validity interval of the family')
	breaks = [beta + e * u for beta, e in pf.breaks]
	if any(b <= 0 for b in breaks) or any(b2 <= b1 for b1, b2 in zip(breaks, breaks[1:])):
		raise OutOfRegime(f'breaks {list(map(str, breaks))} at u = {u} are degenerate')
	try:
		return MorphismProfile.build(PiecewiseMonomial.build(breaks, pf.slopes), etale=pf.etale)
	except ValueError as exc:
		raise OutOfRegime(str(exc)) from exc


def frobenius_family(p):
	p = check_prime(p)
	return ProfileFamily.build([(Fraction(1, p - 1), 0)], [p, 1], 0)


def off_centered_family(p, val_a):
	p = check_prime(p)
	val_a = as_rational(val_a)
	top = Fraction(1, p - 1) + val_a
	return ProfileFamily.build([(top, -1)], [p, 1], val_a, top)


def inseparable_family(p, nu, val_a):
	"""Residually inseparable family with different |a| rho^nu."""
	p = check_prime(p)
	val_a = as_rational(val_a)
	if val_a < 0:
		raise OutOfRegime(f'|a| must be at most 1, got log-value {val_a}')
	if val_a == 0 and nu == 0:
		raise OutOfRegime('a different of 1 along the whole branch gives no etale profile')
	return ProfileFamily.build([(val_a / (p - 1), Fraction(nu, p - 1))], [p, 1], 0, INFINITY)
