"""
Django settings for the spin squeezing toolkit.

The project has no web surface: Django provides settings, logging and the
management-command runner, and REST framework provides the serializers used
for state files and report documents.
"""

import os
from pathlib import Path

from dotenv import load_dotenv

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent.parent

load_dotenv(BASE_DIR / '.env')

# SECURITY WARNING: keep the secret key used in production secret!
SECRET_KEY = os.environ.get('DJANGO_SECRET_KEY', 'change-this-in-production')

DEBUG = os.environ.get('DJANGO_DEBUG', 'False') == 'True'

# Application definition

INSTALLED_APPS = [
    "rest_framework",
    "apps.states",
    "apps.frames",
    "apps.squeezing",
    "apps.entanglement",
    "apps.transforms",
    "apps.reports",
]

# No models are defined; the in-memory backend keeps Django's checks quiet.
DATABASES = {
    "default": {
        "ENGINE": "django.db.backends.sqlite3",
        "NAME": ":memory:",
    }
}

TIME_ZONE = "UTC"

USE_I18N = False

# REST Framework settings (serializers only)
REST_FRAMEWORK = {
    'UNAUTHENTICATED_USER': None,
}


def _env_int(name, default):
    return int(os.environ.get(name, default))


def _env_float(name, default):
    return float(os.environ.get(name, default))


# Squeezing engine settings
SQUEEZING = {
    'DEFAULT_SEED': _env_int('SQUEEZING_DEFAULT_SEED', 7),
    'N_RESTARTS': _env_int('SQUEEZING_RESTARTS', 16),
    'LARGE_N_RESTARTS': _env_int('SQUEEZING_LARGE_N_RESTARTS', 64),
    'LARGE_N_THRESHOLD': _env_int('SQUEEZING_LARGE_N_THRESHOLD', 8),
    'MAX_SWEEPS': _env_int('SQUEEZING_MAX_SWEEPS', 200),
    'CONVERGENCE_TOL': _env_float('SQUEEZING_CONVERGENCE_TOL', 1e-12),
    'WORKERS': _env_int('SQUEEZING_WORKERS', 1),
    'MAX_QUBITS': 14,
    'OPERATOR_MAX_QUBITS': 10,
    'DEGENERACY_THRESHOLD': 1e-9,
    'WITNESS_MARGIN': 1e-9,
    'INVARIANCE_TOLERANCE': 1e-6,
    'J0_INVARIANCE_TOLERANCE': 1e-10,
    'REPORT_SCHEMA_VERSION': '1.0',
}

# Logging goes to stderr; stdout is reserved for reports.
LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'simple': {
            'format': '{asctime} {levelname} {name}: {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'stream': 'ext://sys.stderr',
            'formatter': 'simple',
        },
    },
    'loggers': {
        'apps': {
            'handlers': ['console'],
            'level': os.environ.get('SQUEEZING_LOG_LEVEL', 'WARNING'),
        },
        'core': {
            'handlers': ['console'],
            'level': os.environ.get('SQUEEZING_LOG_LEVEL', 'WARNING'),
        },
    },
}
