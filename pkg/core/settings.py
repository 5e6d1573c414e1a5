"""
Django settings for the radii project.

The computational commands read their defaults from the RADII dict below;
the environment only configures the framework and the Celery transport.
"""

import os

SECRET_KEY = os.environ.get('DJANGO_SECRET_KEY', 'django-insecure-radii-local-only')
DEBUG = os.environ.get('DJANGO_DEBUG', 'True') == 'True'

ALLOWED_HOSTS = []

INSTALLED_APPS = [
    'rest_framework',
    'radii',
]

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = False

USE_TZ = True

REST_FRAMEWORK = {
    'STRICT_JSON': True,
    'UNAUTHENTICATED_USER': None,
    'DEFAULT_AUTHENTICATION_CLASSES': [],
    'DEFAULT_PERMISSION_CLASSES': [],
}

CELERY_BROKER_URL = os.environ.get('CELERY_BROKER_URL', 'memory://')
CELERY_RESULT_BACKEND = os.environ.get('CELERY_RESULT_BACKEND', 'cache+memory://')
CELERY_ACCEPT_CONTENT = ['json']
CELERY_TASK_SERIALIZER = 'json'
CELERY_RESULT_SERIALIZER = 'json'
CELERY_TASK_ALWAYS_EAGER = os.environ.get('RADII_CELERY_EAGER', 'True') == 'True'
CELERY_TASK_EAGER_PROPAGATES = True

RADII = {
    'DEFAULT_FORMAT': 'json',
    'ORACLE_COUNT': 1000,
    'ORACLE_SHARDS': 4,
    'ORACLE_SEED': 0,
    'CORPUS_MAX_DEGREE': 8,
    'CORPUS_MAX_TERMS': 6,
    'CORPUS_MAX_RANK': 4,
    'CORPUS_MAX_SEP': 3,
    'CORPUS_MAX_DENOMINATOR': 12,
}

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'simple': {
            'format': '{levelname} {name}: {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'simple',
        },
    },
    'loggers': {
        'radii': {
            'handlers': ['console'],
            'level': os.environ.get('RADII_LOG_LEVEL', 'INFO'),
            'propagate': False,
        },
        'celery': {
            'handlers': ['console'],
            'level': 'WARNING',
        },
    },
}
