"""
Django settings for the extremal-tsirelson project.

The project has no database, no views and no middleware: Django provides
the command framework, the template engine used for SVG output and the test
runner. Every tunable is read from the environment (or a ``.env`` file)
through python-decouple.

For the full list of settings and their values, see
https://docs.djangoproject.com/en/5.2/ref/settings/
"""

from pathlib import Path
from decouple import config

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent


# SECURITY WARNING: the key is unused without sessions or signing, but Django requires one.
SECRET_KEY = config('SECRET_KEY', default='extremal-tsirelson-local-key')

DEBUG = config('DEBUG', default=False, cast=bool)

ALLOWED_HOSTS = []


# Application definition

INSTALLED_APPS = [
    'tsirelson',
]

MIDDLEWARE = []

TEMPLATES = [
    {
        'BACKEND': 'django.template.backends.django.DjangoTemplates',
        'DIRS': [],
        'APP_DIRS': True,
        'OPTIONS': {},
    },
]


# Everything is computed in memory and written to flat files.

DATABASES = {}


# Solvers and scans

TSIRELSON_SDP_SOLVER = config('TSIRELSON_SDP_SOLVER', default='CLARABEL')

TSIRELSON_SDP_MAX_ITERS = config('TSIRELSON_SDP_MAX_ITERS', default=500, cast=int)

TSIRELSON_JACOBI_MAX_SWEEPS = config('TSIRELSON_JACOBI_MAX_SWEEPS', default=64, cast=int)

TSIRELSON_SCAN_SEED = config('TSIRELSON_SCAN_SEED', default=0, cast=int)


# Logging
# https://docs.djangoproject.com/en/5.2/topics/logging/

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'plain': {
            'format': '%(asctime)s %(levelname)s %(name)s: %(message)s',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'plain',
        },
    },
    'loggers': {
        'tsirelson': {
            'handlers': ['console'],
            'level': config('TSIRELSON_LOG_LEVEL', default='WARNING'),
            'propagate': False,
        },
    },
}


# Internationalization
# https://docs.djangoproject.com/en/5.2/topics/i18n/

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = False

USE_TZ = True
