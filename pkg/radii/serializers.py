from rest_framework import serializers
from rest_framework.settings import api_settings

from .connection import DirectionModel, MultiRadius, ProfileFamily
from .morphism import AnnulusDirection, FiberConfiguration, FiberPoint, MorphismProfile, RamificationData
from .pwm import INFINITY, PiecewiseMonomial, SeriesValuations, as_rational, format_rational, is_infinite, radius_to_logvalue


class RationalField(serializers.Field):
	"""Exact rational written as "n/d", "n" or a JSON integer; no decimals or exponents."""
	default_error_messages = {
		'invalid': 'Expected an exact rational such as "3/2", got {value!r}.',
	}

	def to_internal_value(self, data):
		if isinstance(data, (bool, float)) or not isinstance(data, (str, int)):
			self.fail('invalid', value=data)
		try:
			return as_rational(data)
		except (ValueError, ZeroDivisionError):
			self.fail('invalid', value=data)

	def to_representation(self, value):
		return format_rational(value)


class LogValueField(RationalField):
	default_error_messages = {
		'invalid': 'Expected a log-value such as "3/2", got {value!r}.',
		'negative': 'Log-value {value} is negative (radius above 1).',
		'infinite': 'Radius 0 ("inf") is not allowed here.',
		'radius': '{message}',
	}

	def __init__(self, allow_infinite=False, radius=False, **kwargs):
		self.allow_infinite = allow_infinite
		self.radius = radius
		super().__init__(**kwargs)

	def to_internal_value(self, data):
		base = self.context.get('base')
		if self.radius and base:
			try:
				value = radius_to_logvalue(data, base)
			except (ValueError, ZeroDivisionError) as exc:
				self.fail('radius', message=str(exc))
		elif isinstance(data, str) and data.strip() == 'inf':
			value = INFINITY
		else:
			value = super().to_internal_value(data)
			if value < 0:
				self.fail('negative', value=value)
		if is_infinite(value) and not self.allow_infinite:
			self.fail('infinite')
		return value


class PairField(serializers.Field):
	"""A two-element JSON array with a field for each slot."""
	default_error_messages = {
		'invalid': 'Expected a pair, got {value!r}.',
	}

	def __init__(self, first, second, **kwargs):
		self.first = first
		self.second = second
		super().__init__(**kwargs)
		self.first.bind(field_name='', parent=self)
		self.second.bind(field_name='', parent=self)

	def to_internal_value(self, data):
		if not isinstance(data, (list, tuple)) or len(data) != 2:
			self.fail('invalid', value=data)
		values, errors = [], {}
		for index, (field, item) in enumerate(zip((self.first, self.second), data)):
			try:
				values.append(field.run_validation(item))
			except serializers.ValidationError as exc:
				errors[index] = exc.detail
		if errors:
			raise serializers.ValidationError(errors)
		return tuple(values)

	def to_representation(self, value):
		a, b = value
		return [self.first.to_representation(a), self.second.to_representation(b)]


def error_pointers(detail, path=''):
	"""Flatten nested serializer errors into "/json/pointer: message" lines."""
	if isinstance(detail, dict):
		lines = []
		for key, value in detail.items():
			child = path if key == api_settings.NON_FIELD_ERRORS_KEY else f'{path}/{key}'
			lines.extend(error_pointers(value, child))
		return lines
	if isinstance(detail, list):
		if all(isinstance(item, str) for item in detail):
			return [f'{path or "/"}: {item}' for item in detail]
		lines = []
		for index, item in enumerate(detail):
			if item:
				lines.extend(error_pointers(item, f'{path}/{index}'))
		return lines
	return [f'{path or "/"}: {detail}']


def domain_error(exc):
	return serializers.ValidationError(str(exc))


class PiecewiseMonomialSerializer(serializers.Serializer):
	breaks = serializers.ListField(child=RationalField())
	slopes = serializers.ListField(child=RationalField(), min_length=1)

	def validate(self, attrs):
		try:
			return PiecewiseMonomial.build(attrs['breaks'], attrs['slopes'])
		except ValueError as exc:
			raise domain_error(exc)


class MorphismProfileSerializer(PiecewiseMonomialSerializer):
	etale = serializers.BooleanField(default=True)

	def validate(self, attrs):
		pwm = super().validate(attrs)
		try:
			return MorphismProfile.build(pwm, etale=attrs['etale'])
		except ValueError as exc:
			raise domain_error(exc)


class EquationProfileSerializer(serializers.Serializer):
	breaks = serializers.ListField(child=RationalField(), source='pwm.breaks')
	slopes = serializers.ListField(child=RationalField(), source='pwm.slopes')
	rank = serializers.IntegerField()


class SeriesValuationsSerializer(serializers.Serializer):
	terms = serializers.ListField(
		child=PairField(serializers.IntegerField(), RationalField()),
		min_length=1,
	)

	def validate(self, attrs):
		try:
			return SeriesValuations.build(attrs['terms'])
		except ValueError as exc:
			raise domain_error(exc)


class NDataSerializer(serializers.Serializer):
	steps = serializers.ListField(child=PairField(RationalField(), serializers.IntegerField()))


class MultiRadiusSerializer(serializers.Serializer):
	logvalues = serializers.ListField(child=LogValueField(radius=True), min_length=1)

	def validate(self, attrs):
		try:
			return MultiRadius.from_multiset(attrs['logvalues'])
		except ValueError as exc:
			raise domain_error(exc)


class FiberPointSerializer(serializers.Serializer):
	label = serializers.CharField(required=False, default='y')
	sep_degree = serializers.IntegerField(min_value=1)
	profile = MorphismProfileSerializer()
	radii = serializers.ListField(child=LogValueField(radius=True), min_length=1)

	def validate(self, attrs):
		try:
			return FiberPoint(
				attrs['label'],
				attrs['profile'],
				attrs['sep_degree'],
				MultiRadius.from_multiset(attrs['radii']),
			)
		except ValueError as exc:
			raise domain_error(exc)


class FiberConfigurationSerializer(serializers.Serializer):
	rank = serializers.IntegerField(min_value=1)
	points = FiberPointSerializer(many=True)

	def validate(self, attrs):
		try:
			return FiberConfiguration.build(attrs['points'], attrs['rank'])
		except ValueError as exc:
			raise domain_error(exc)


class AnnulusDirectionSerializer(serializers.Serializer):
	d = serializers.IntegerField(min_value=1)
	sigma = serializers.IntegerField()
	val_a = RationalField()

	def validate(self, attrs):
		try:
			return AnnulusDirection(**attrs)
		except ValueError as exc:
			raise domain_error(exc)


class RamificationDataSerializer(serializers.Serializer):
	degree = serializers.IntegerField(min_value=1)
	jumps = serializers.ListField(
		child=PairField(LogValueField(), serializers.IntegerField(min_value=1)),
		default=list,
	)

	def validate(self, attrs):
		try:
			return RamificationData.build(attrs['degree'], attrs['jumps'])
		except ValueError as exc:
			raise domain_error(exc)


class ConvergencePolygonSerializer(serializers.Serializer):
	vertices = serializers.ListField(child=PairField(serializers.IntegerField(), RationalField()))
	height = RationalField()


class DirectionModelSerializer(serializers.Serializer):
	components = serializers.ListField(
		child=PairField(RationalField(), serializers.IntegerField()),
		min_length=1,
	)

	def validate(self, attrs):
		try:
			return DirectionModel.build(attrs['components'])
		except ValueError as exc:
			raise domain_error(exc)


class ProfileFamilySerializer(serializers.Serializer):
	interval = PairField(RationalField(), LogValueField(allow_infinite=True))
	breaks = serializers.ListField(child=PairField(RationalField(), RationalField()))
	slopes = serializers.ListField(child=RationalField(), min_length=1)
	etale = serializers.BooleanField(default=True)

	def validate(self, attrs):
		lower, upper = attrs['interval']
		try:
			return ProfileFamily.build(attrs['breaks'], attrs['slopes'], lower, upper, attrs['etale'])
		except ValueError as exc:
			raise domain_error(exc)

	def to_representation(self, instance):
		upper = INFINITY if instance.upper is None else instance.upper
		return {
			'interval': [format_rational(instance.lower), format_rational(upper)],
			'breaks': [[format_rational(beta), format_rational(e)] for beta, e in instance.breaks],
			'slopes': [format_rational(s) for s in instance.slopes],
			'etale': instance.etale,
		}


class PhiTableSerializer(serializers.Serializer):
	candidates = serializers.SerializerMethodField()

	def get_candidates(self, obj):
		return [[format_rational(s), phi, phi_plus] for s, phi, phi_plus in obj.rows]


class RiemannHurwitzSerializer(serializers.Serializer):
	g_y = serializers.IntegerField(min_value=0)
	g_x = serializers.IntegerField(min_value=0)
	d = serializers.IntegerField(min_value=1)
	branches = serializers.ListField(
		child=PairField(serializers.IntegerField(), serializers.IntegerField(min_value=1)),
		default=list,
	)


class LaplacianCheckSerializer(serializers.Serializer):
	delta_y = serializers.IntegerField()
	delta_x = serializers.IntegerField()
	r = serializers.IntegerField(min_value=1)
	nus = serializers.ListField(child=serializers.IntegerField(), default=list)


class HeightCheckSerializer(serializers.Serializer):
	"""Either observed heights (rank, h_E, h_F) or a family and a direction model."""
	direction = AnnulusDirectionSerializer()
	u = RationalField()
	rank = serializers.IntegerField(min_value=1, required=False)
	h_E = RationalField(required=False)
	h_F = RationalField(required=False)
	family = ProfileFamilySerializer(required=False)
	model = DirectionModelSerializer(required=False)
	sep = serializers.IntegerField(min_value=1, default=1)

	def validate(self, attrs):
		if attrs['u'] < 0:
			raise serializers.ValidationError({'u': ['u must be nonnegative.']})
		engine = 'family' in attrs or 'model' in attrs
		if engine and not ('family' in attrs and 'model' in attrs):
			raise serializers.ValidationError('family and model must be given together.')
		if not engine:
			missing = [name for name in ('rank', 'h_E', 'h_F') if name not in attrs]
			if missing:
				raise serializers.ValidationError({name: ['This field is required.'] for name in missing})
		return attrs


class BoundCheckSerializer(serializers.Serializer):
	g = serializers.IntegerField(min_value=0)
	gamma_size = serializers.IntegerField(min_value=2)
	i = serializers.IntegerField(min_value=1)
	delta_i = serializers.IntegerField()
	equality_expected = serializers.BooleanField(default=False)
