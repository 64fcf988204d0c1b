"""
Django settings for the variation toolkit.

Only the pieces the management commands and the DRF serializers need are
configured: there is no database, no URL routing and no middleware.

Every numeric tunable sits in the ``VHK`` dict and can be overridden from
the environment, the same way database credentials used to be read.
"""

from pathlib import Path

import os

BASE_DIR = Path(__file__).resolve().parent.parent

SECRET_KEY = os.environ.get('VHK_SECRET_KEY', 'vhk-local-only')

DEBUG = os.environ.get('VHK_DEBUG', '0') == '1'

ALLOWED_HOSTS = []


# Application definition

INSTALLED_APPS = [
    'rest_framework',
    'core',
    'variation',
    'selection',
    'oracle',
]

# Commands and tests never touch a database.
DATABASES = {}

TIME_ZONE = 'UTC'

USE_TZ = True

REST_FRAMEWORK = {
    # Serializers, parsers and renderers only; no views, so no auth apps.
    'DEFAULT_AUTHENTICATION_CLASSES': [],
    'DEFAULT_PERMISSION_CLASSES': [],
    'UNAUTHENTICATED_USER': None,
    'COMPACT_JSON': True,
    'STRICT_JSON': True,
    'UNICODE_JSON': True,
}


# Toolkit configuration

VHK = {
    'VERSION': '0.3.0',
    'TOLERANCE': float(os.environ.get('VHK_TOLERANCE', '1e-9')),
    'MAX_DIMENSION': 16,
    'VERIFY_MAX_DIMENSION': 6,
    'VERIFY_MAX_ORDER': 12,
    'PARTITION_CAP': int(os.environ.get('VHK_PARTITION_CAP', 2 ** 20)),
    'BOUND_CAP': float(os.environ.get('VHK_BOUND_CAP', '1e6')),
    'CONVERGENCE_TOLERANCE': float(
        os.environ.get('VHK_CONVERGENCE_TOLERANCE', '1e-2')),
}


# Logging

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '{levelname} {asctime} {name} {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'verbose',
        },
    },
    'loggers': {
        app_name: {
            'handlers': ['console'],
            'level': os.environ.get('VHK_LOG_LEVEL', 'WARNING'),
            'propagate': False,
        }
        for app_name in ('core', 'variation', 'selection', 'oracle')
    },
}
