"""Exact log-side arithmetic of piecewise |k*|-monomial maps.

A radius r in (0, 1] is stored as its log-value v = -log_p r, an exact
Fraction; radius 0 is the sentinel INFINITY. A piecewise monomial map
f: [0, 1] -> [0, 1] fixing 0 and 1 becomes a continuous nondecreasing
piecewise affine map g on [0, oo) with g(0) = 0, described by its
breakpoints and the slope of every segment.
"""
import logging
import math
import re
from dataclasses import dataclass
from fractions import Fraction

from sympy import isprime, multiplicity

from .exceptions import InvalidSeries, NotInvertible
from .utils import lower_envelope

logger = logging.getLogger(__name__)

INFINITY = math.inf

_RATIONAL = re.compile(r'-?\d+(?:/\d+)?')

LEFT = 'left'
RIGHT = 'right'


def as_rational(value):
	"""Coerce ints, Fractions and strings "n" or "n/d" to a Fraction."""
	if isinstance(value, Fraction):
		return value
	if isinstance(value, bool) or isinstance(value, float):
		raise TypeError(f'{value!r} is not an exact rational')
	if isinstance(value, str) and not _RATIONAL.fullmatch(value.strip()):
		raise ValueError(f'{value!r} is not of the form n or n/d')
	return Fraction(value)


def as_logvalue(value):
	"""Like as_rational, but also accepts "inf" and rejects negatives."""
	if value is INFINITY or (isinstance(value, str) and value.strip() == 'inf'):
		return INFINITY
	v = as_rational(value)
	if v < 0:
		raise ValueError(f'log-value {v} is negative (radius above 1)')
	return v


def check_prime(p):
	if isinstance(p, bool) or not isprime(int(p)):
		raise ValueError(f'{p} is not a prime')
	return int(p)


def is_infinite(v):
	return v is INFINITY or v == INFINITY


def format_rational(value):
	if is_infinite(value):
		return 'inf'
	return str(as_rational(value))


_POWER = re.compile(r'^\s*(\d+)\s*\^\s*\(?\s*(-?\d+(?:/\d+)?)\s*\)?\s*$')


def radius_to_logvalue(text, p):
	"""Log-value of a radius literal such as "1/8", "0" or "2^(-3/2)"."""
	text = str(text).strip()
	match = _POWER.match(text)
	if match:
		if int(match.group(1)) != p:
			raise ValueError(f'{text}: base {match.group(1)} is not {p}')
		return as_logvalue(-Fraction(match.group(2)))
	r = as_rational(text)
	if r == 0:
		return INFINITY
	if r < 0 or r > 1:
		raise ValueError(f'radius {text} is outside [0, 1]')
	if r.numerator != 1:
		raise ValueError(f'radius {text} is not a power of {p}')
	k = multiplicity(p, r.denominator) if r.denominator > 1 else 0
	if p ** k != r.denominator:
		raise ValueError(f'radius {text} is not a power of {p}')
	return Fraction(k)


@dataclass(frozen=True)
class PiecewiseMonomial:
	"""Canonical log-side piecewise monomial map.

	`breaks` is a strictly increasing tuple of positive Fractions and
	`slopes` has one more entry than `breaks`. Adjacent slopes always
	differ, so equality of instances is equality of functions.
	"""
	breaks: tuple
	slopes: tuple

	@classmethod
	def build(cls, breaks, slopes):
		breaks = [as_rational(b) for b in breaks]
		slopes = [as_rational(s) for s in slopes]
		if len(slopes) != len(breaks) + 1:
			raise ValueError(f'{len(breaks)} breaks need {len(breaks) + 1} slopes, got {len(slopes)}')
		if any(s < 0 for s in slopes):
			raise ValueError('slopes must be nonnegative')
		if any(b <= 0 for b in breaks):
			raise ValueError('breaks must be positive')
		if any(b2 <= b1 for b1, b2 in zip(breaks, breaks[1:])):
			raise ValueError('breaks must be strictly increasing')

		kept_breaks, kept_slopes = [], [slopes[0]]
		for b, s in zip(breaks, slopes[1:]):
			if s == kept_slopes[-1]:
				continue
			kept_breaks.append(b)
			kept_slopes.append(s)
		return cls(tuple(kept_breaks), tuple(kept_slopes))

	@classmethod
	def identity(cls):
		return cls((), (Fraction(1),))

	@classmethod
	def zero(cls):
		return cls((), (Fraction(0),))

	@classmethod
	def monomial(cls, degree):
		return cls((), (as_rational(degree),))

	def __call__(self, v):
		return pwm_eval(self, v)

	def __str__(self):
		breaks = ', '.join(format_rational(b) for b in self.breaks)
		slopes = ', '.join(format_rational(s) for s in self.slopes)
		return f'{{breaks: [{breaks}]; slopes: [{slopes}]}}'

	@property
	def values(self):
		"""g at each break, accumulated segment by segment."""
		out, acc, prev = [], Fraction(0), Fraction(0)
		for b, s in zip(self.breaks, self.slopes):
			acc += s * (b - prev)
			out.append(acc)
			prev = b
		return tuple(out)

	@property
	def final_slope(self):
		return self.slopes[-1]

	def slope_after(self, v):
		"""Slope on (v, v + eps)."""
		for b, s in zip(self.breaks, self.slopes):
			if v < b:
				return s
		return self.slopes[-1]

	def slope_before(self, v):
		"""Slope on (v - eps, v); the first slope at v = 0."""
		for b, s in zip(self.breaks, self.slopes):
			if v <= b:
				return s
		return self.slopes[-1]


def pwm_eval(f, v):
	"""g(v); at INFINITY the limit of g."""
	if is_infinite(v):
		if f.final_slope > 0:
			return INFINITY
		return f.values[-1] if f.breaks else Fraction(0)
	v = as_rational(v)
	acc, prev = Fraction(0), Fraction(0)
	for b, s in zip(f.breaks, f.slopes):
		if v <= b:
			return acc + s * (v - prev)
		acc += s * (b - prev)
		prev = b
	return acc + f.final_slope * (v - prev)


def _tabulate(points, fn, tail_slope):
	"""Build the canonical map that is affine between sorted `points`.

	`fn` evaluates the target at any point, `tail_slope` is its slope
	beyond the last point.
	"""
	points = sorted({as_rational(x) for x in points if x > 0})
	breaks, slopes = [], []
	prev_x, prev_y = Fraction(0), Fraction(0)
	for x in points:
		y = fn(x)
		slopes.append((y - prev_y) / (x - prev_x))
		breaks.append(x)
		prev_x, prev_y = x, y
	slopes.append(tail_slope)
	return PiecewiseMonomial.build(breaks, slopes)


def _preimages(f, value):
	"""Points where f crosses `value` on a strictly increasing segment."""
	out = []
	start, acc = Fraction(0), Fraction(0)
	for b, s in zip(f.breaks + (None,), f.slopes):
		if s > 0 and value >= acc and (b is None or value <= acc + s * (b - start)):
			out.append(start + (value - acc) / s)
		if b is not None:
			acc += s * (b - start)
			start = b
	return out


def pwm_compose(outer, inner):
	"""outer o inner."""
	points = set(inner.breaks)
	for c in outer.breaks:
		points.update(_preimages(inner, c))
	last = max(points, default=Fraction(0))
	tail = outer.slope_after(pwm_eval(inner, last)) * inner.final_slope
	return _tabulate(points, lambda x: pwm_eval(outer, pwm_eval(inner, x)), tail)


def pwm_inverse(f):
	if any(s == 0 for s in f.slopes):
		raise NotInvertible(f'{f} has a flat segment')
	return PiecewiseMonomial.build(f.values, [1 / s for s in f.slopes])


def pwm_mul(f, h):
	"""Pointwise product on the radius side, i.e. g_f + g_h."""
	points = set(f.breaks) | set(h.breaks)
	return _tabulate(points, lambda x: pwm_eval(f, x) + pwm_eval(h, x), f.final_slope + h.final_slope)


def pwm_pow(f, n):
	if n < 1:
		raise ValueError(f'exponent must be a positive integer, got {n}')
	return PiecewiseMonomial.build(f.breaks, [s * n for s in f.slopes])


def pwm_equal(f, h):
	return f.breaks == h.breaks and f.slopes == h.slopes


def degrees_at(f, s, side):
	"""Radius-side degree of f at the radius with log-value `s`.

	The left degree in radius is read on the larger-v side. At s = 0
	(radius 1) the right degree is the continuation of the first segment.
	"""
	s = as_logvalue(s)
	if is_infinite(s):
		raise ValueError('degrees are only defined at radii in (0, 1]')
	if side == LEFT:
		return f.slope_after(s)
	if side == RIGHT:
		return f.slope_before(s)
	raise ValueError(f'side must be {LEFT!r} or {RIGHT!r}, got {side!r}')


def breakpoint_radii(f):
	"""(break, image) pairs of log-values."""
	return list(zip(f.breaks, f.values))


@dataclass(frozen=True)
class SeriesValuations:
	"""Valuations of the coefficients of a disc morphism T -> sum a_i T^i."""
	terms: tuple

	@classmethod
	def build(cls, terms):
		seen = {}
		for index, valuation in terms:
			index, valuation = int(index), as_rational(valuation)
			if index < 1:
				raise InvalidSeries(f'term index {index} < 1: the center must map to the center')
			if valuation < 0:
				raise InvalidSeries(f'valuation {valuation} of a_{index} is negative')
			if index in seen:
				raise InvalidSeries(f'duplicate term index {index}')
			seen[index] = valuation
		if not seen:
			raise InvalidSeries('series has no terms')
		if min(seen.values()) != 0:
			raise InvalidSeries('the smallest coefficient valuation must be 0 (image is the unit disc)')
		return cls(tuple(sorted(seen.items())))

	def valuation(self, index):
		return dict(self.terms).get(index)


def profile_from_series(sv):
	"""Valuation polygon of a series: g(v) = min_i (i v + val(a_i))."""
	if not isinstance(sv, SeriesValuations):
		sv = SeriesValuations.build(sv)
	pieces = lower_envelope((Fraction(i), val) for i, val in sv.terms)
	if pieces[0][2] != 0:
		raise InvalidSeries(f'envelope starts at {pieces[0][2]} instead of 0')
	profile = PiecewiseMonomial.build([x for x, _, _ in pieces[1:]], [slope for _, slope, _ in pieces])
	logger.debug('series with %d terms has profile %s', len(sv.terms), profile)
	return profile


def coefficient_relation_holds(sv, f):
	"""Check val(a_{d_i}) = val(a_{d_1}) + sum_{j<i} (d_j - d_{j+1}) v(t_j).

	Degrees d_1 < d_2 < ... are the slopes of f read from radius 0 upward,
	t_j the break radii between them.
	"""
	degrees = [int(s) for s in reversed(f.slopes)]
	cuts = list(reversed(f.breaks))
	base = sv.valuation(degrees[0])
	if base is None:
		return False
	expected = base
	for i, d in enumerate(degrees):
		if i:
			expected += (degrees[i - 1] - d) * cuts[i - 1]
		if sv.valuation(d) != expected:
			return False
	return True
