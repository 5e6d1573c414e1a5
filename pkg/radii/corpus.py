"""Seeded random fiber configurations for the pushforward cross-checks."""
from fractions import Fraction

from django.conf import settings

from .connection import MultiRadius
from .morphism import FiberConfiguration, FiberPoint, series_profile
from .pwm import PiecewiseMonomial, SeriesValuations, pwm_eval


def corpus_limits():
	config = settings.RADII
	return {
		'max_degree': config['CORPUS_MAX_DEGREE'],
		'max_terms': config['CORPUS_MAX_TERMS'],
		'max_rank': config['CORPUS_MAX_RANK'],
		'max_sep': config['CORPUS_MAX_SEP'],
		'max_denominator': config['CORPUS_MAX_DENOMINATOR'],
	}


def series_for_profile(chain, breaks, extra=()):
	"""Series valuations whose valuation polygon is a prescribed profile.

	`chain` lists the radius-side degrees 1 = d_1 < d_2 < ... from radius 0
	upward, `breaks` the log-values where the degree changes. Each `extra`
	(index, excess) adds a term lying `excess` above the envelope.
	"""
	profile = PiecewiseMonomial.build(breaks, list(reversed(chain)))
	starts = [Fraction(0)] + list(profile.breaks)
	terms = {}
	for start, slope in zip(starts, profile.slopes):
		terms[int(slope)] = pwm_eval(profile, start) - slope * start
	for index, excess in extra:
		if index in terms:
			continue
		terms[index] = max(pwm_eval(profile, x) - index * x for x in starts) + excess
	return SeriesValuations.build(terms.items())


def random_rational(rng, high, max_denominator):
	q = rng.randint(1, max_denominator)
	return Fraction(rng.randint(0, high * q), q)


def degree_chain(rng, max_degree):
	chain = [1]
	while rng.random() < 0.65:
		factors = [f for f in (2, 3) if chain[-1] * f <= max_degree]
		if not factors:
			break
		chain.append(chain[-1] * rng.choice(factors))
	return chain


def random_series(rng, max_degree=8, max_terms=6, max_denominator=12):
	chain = degree_chain(rng, max_degree)
	breaks = set()
	while len(breaks) < len(chain) - 1:
		b = random_rational(rng, 3, max_denominator)
		if b > 0:
			breaks.add(b)
	spare = [i for i in range(2, max_degree + 1) if i not in chain]
	rng.shuffle(spare)
	extra = [
		(index, random_rational(rng, 2, max_denominator))
		for index in spare[:max(0, max_terms - len(chain))]
		if rng.random() < 0.5
	]
	return series_for_profile(chain, sorted(breaks), extra)


def random_profile(rng, max_degree=8, max_terms=6, max_denominator=12):
	return series_profile(random_series(rng, max_degree, max_terms, max_denominator))


def random_multiradius(rng, rank, max_denominator=12):
	values = [
		Fraction(0) if rng.random() < 0.25 else random_rational(rng, 4, max_denominator)
		for _ in range(rank)
	]
	return MultiRadius.from_multiset(values)


def random_fiber_configuration(rng, max_degree=8, max_terms=6, max_rank=4, max_sep=3, max_denominator=12):
	rank = rng.randint(1, max_rank)
	points = []
	for index in range(rng.randint(1, 3)):
		points.append(FiberPoint(
			f'y{index}',
			random_profile(rng, max_degree, max_terms, max_denominator),
			rng.randint(1, max_sep),
			random_multiradius(rng, rank, max_denominator),
		))
	return FiberConfiguration.build(points, rank)

