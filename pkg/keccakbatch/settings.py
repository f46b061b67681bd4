"""
Django settings for keccakbatch project.

The project has no HTTP surface: Django provides configuration, logging,
the management-command CLI, the ORM for benchmark history and the test
runner.

For the full list of settings and their values, see
https://docs.djangoproject.com/en/5.0/ref/settings/
"""

from pathlib import Path
from dotenv import load_dotenv
import os

# Load environment variables from .env file
load_dotenv()

LOG_LEVEL = os.getenv('LOG_LEVEL', 'INFO')

# Logging Configuration
LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '{asctime} {levelname} {name} {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'verbose',
        },
    },
    'root': {
        'handlers': ['console'],
        'level': LOG_LEVEL,
    },
}

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

# SECURITY WARNING: keep the secret key used in production secret!
SECRET_KEY = os.getenv('DJANGO_SECRET_KEY', 'django-insecure-keccakbatch-local-only')

DEBUG = os.getenv('DJANGO_DEBUG', 'False') == 'True'

ALLOWED_HOSTS = []

INSTALLED_APPS = [
    'django.contrib.auth',
    'django.contrib.contenttypes',

    # Third-party apps
    'rest_framework',

    # Local apps
    'keccak.apps.KeccakConfig',
    'batches.apps.BatchesConfig',
    'bench.apps.BenchConfig',
]

# Batch engine settings
HASH_BACKEND = os.getenv('HASH_BACKEND', 'parallel')  # 'sequential' or 'parallel'
BATCH_WORKERS = os.getenv('BATCH_WORKERS', 'auto')  # integer or 'auto' (one per CPU)
BATCH_CHUNK_SIZE = os.getenv('BATCH_CHUNK_SIZE', 'auto')  # integer or 'auto'

# Benchmark settings
BENCH_REPEATS = int(os.getenv('BENCH_REPEATS', '3'))
BENCH_MESSAGE_SIZE = int(os.getenv('BENCH_MESSAGE_SIZE', '10'))  # bytes per message
BENCH_SEED = int(os.getenv('BENCH_SEED', '2019'))
BENCH_MIN_ELAPSED = float(os.getenv('BENCH_MIN_ELAPSED', '0.001'))  # seconds
BENCH_VARIANT = os.getenv('BENCH_VARIANT', 'sha3-256')

# CLI settings
HASH_READ_CHUNK = int(os.getenv('HASH_READ_CHUNK', '65536'))

# Oracle test sample counts (raise these to run the suite at acceptance scale)
KECCAK_ORACLE_SAMPLES_25 = int(os.getenv('KECCAK_ORACLE_SAMPLES_25', '10000'))
KECCAK_ORACLE_SAMPLES_200 = int(os.getenv('KECCAK_ORACLE_SAMPLES_200', '1000'))
KECCAK_ORACLE_SAMPLES_1600 = int(os.getenv('KECCAK_ORACLE_SAMPLES_1600', '100'))
KECCAK_INJECTIVITY_SAMPLES_200 = int(os.getenv('KECCAK_INJECTIVITY_SAMPLES_200', '2000'))
RUN_SCALING_TESTS = os.getenv('RUN_SCALING_TESTS', '0') == '1'


# Database
# https://docs.djangoproject.com/en/5.0/ref/settings/#databases

DATABASES = {
    'default': {
        'ENGINE': 'django.db.backends.sqlite3',
        'NAME': os.getenv('BENCH_DATABASE', BASE_DIR / 'db.sqlite3'),
    }
}


# Internationalization
# https://docs.djangoproject.com/en/5.0/topics/i18n/

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = True

USE_TZ = True

# Default primary key field type
# https://docs.djangoproject.com/en/5.0/ref/settings/#default-auto-field

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'
