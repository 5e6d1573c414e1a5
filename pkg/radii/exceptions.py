class RadiiError(ValueError):
	"""Base class for every domain error raised by the radii engines."""


class NotInvertible(RadiiError):
	pass


class InvalidSeries(RadiiError):
	pass


class InvalidProfile(RadiiError):
	pass


class InvalidMultiRadius(RadiiError):
	pass


class NotEtale(RadiiError):
	pass


class OutOfRegime(RadiiError):
	pass
