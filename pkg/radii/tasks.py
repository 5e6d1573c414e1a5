import logging
import random

from celery import group, shared_task
from django.conf import settings

from .corpus import corpus_limits, random_fiber_configuration
from .exceptions import RadiiError
from .pushforward import cross_check
from .serializers import FiberConfigurationSerializer

logger = logging.getLogger(__name__)


@shared_task
def check_corpus_shard(seed, count, limits=None):
	"""Cross-check `count` random fiber configurations drawn from `seed`."""
	rng = random.Random(seed)
	limits = limits or corpus_limits()
	logger.info('shard %s: checking %d configurations', seed, count)
	failures = []
	for index in range(count):
		fc = random_fiber_configuration(rng, **limits)
		try:
			agreement = cross_check(fc)['agreement']
			error = None
		except RadiiError as exc:
			agreement, error = False, str(exc)
		if not agreement:
			failures.append({
				'seed': seed,
				'index': index,
				'error': error,
				'fiber': FiberConfigurationSerializer(fc).data,
			})
	if failures:
		logger.warning('shard %s: %d of %d configurations disagree', seed, len(failures), count)
	return {'seed': seed, 'checked': count, 'failures': failures}


def shard_sizes(count, shards):
	shards = max(1, min(shards, count)) if count else 1
	base, rest = divmod(count, shards)
	return [base + (1 if k < rest else 0) for k in range(shards)]


def run_oracle(count=None, shards=None, seed=None):
	"""Fan the corpus out over Celery shards and merge their reports."""
	config = settings.RADII
	count = config['ORACLE_COUNT'] if count is None else count
	shards = config['ORACLE_SHARDS'] if shards is None else shards
	seed = config['ORACLE_SEED'] if seed is None else seed
	limits = corpus_limits()
	signatures = [
		check_corpus_shard.s(seed + k, size, limits)
		for k, size in enumerate(shard_sizes(count, shards))
		if size
	]
	reports = group(signatures).apply_async().get() if signatures else []
	failures = [failure for report in reports for failure in report['failures']]
	return {
		'checked': sum(report['checked'] for report in reports),
		'shards': len(reports),
		'seed': seed,
		'failures': failures,
		'agreement': not failures,
	}
