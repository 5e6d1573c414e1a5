from fractions import Fraction


def lower_envelope(lines, start=Fraction(0)):
	"""Return the lower envelope of affine lines on [start, oo).

	`lines` is an iterable of (slope, intercept) pairs describing
	x -> slope * x + intercept. The result is a list of
	(x_from, slope, intercept) pieces ordered by x_from, the first one
	starting at `start`. Slopes along the envelope strictly decrease.

	Raises ValueError on an empty input.
	"""
	best = {}
	for slope, intercept in lines:
		if slope not in best or intercept < best[slope]:
			best[slope] = intercept
	if not best:
		raise ValueError('lower envelope of an empty set of lines')

	# steeper lines win to the left; the stack keeps lines whose
	# winning intervals are nonempty, in order of increasing x
	stack = []
	for slope in sorted(best, reverse=True):
		line = (slope, best[slope])
		while stack:
			top = stack[-1]
			if len(stack) == 1:
				# the steeper line only survives if it wins somewhere
				# to the right of `start`
				if _meet(top, line) <= start:
					stack.pop()
					continue
				break
			if _meet(stack[-2], line) <= _meet(stack[-2], top):
				stack.pop()
			else:
				break
		stack.append(line)

	pieces = []
	x_from = start
	for i, (slope, intercept) in enumerate(stack):
		if i:
			x_from = _meet(stack[i - 1], (slope, intercept))
		pieces.append((x_from, slope, intercept))
	return pieces


def _meet(steep, flat):
	"""x-coordinate where a steeper line meets a flatter one."""
	(a1, b1), (a2, b2) = steep, flat
	return Fraction(b2 - b1) / Fraction(a1 - a2)
