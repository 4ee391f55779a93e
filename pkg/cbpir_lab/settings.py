"""
Django settings for cbpir_lab project.

Laboratory for the code-based single-server PIR scheme: field tower,
random linear codes, query/response protocol, sub-query rank attack and
the closed-form rate/threshold analysis.
"""
import os
from pathlib import Path

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

# SECURITY WARNING: keep the secret key used in production secret!
SECRET_KEY = os.getenv('DJANGO_SECRET_KEY', 'django-insecure-cbpir-lab-change-in-production')

# SECURITY WARNING: don't run with debug turned on in production!
DEBUG = os.getenv('DJANGO_DEBUG', 'True') == 'True'

ALLOWED_HOSTS = ['127.0.0.1', 'localhost']

# Application definition
INSTALLED_APPS = [
    'django.contrib.auth',
    'django.contrib.contenttypes',

    'rest_framework',

    # Local apps
    'gf',
    'matfq',
    'lincode',
    'scheme',
    'attack',
    'analysis',
    'wire',
    'cli',
]

MIDDLEWARE = [
    'django.middleware.security.SecurityMiddleware',
    'django.middleware.common.CommonMiddleware',
]

ROOT_URLCONF = 'cbpir_lab.urls'

TEMPLATES = []

WSGI_APPLICATION = 'cbpir_lab.wsgi.application'

# Protocol objects are immutable values; the ORM is not used.
DATABASES = {
    'default': {
        'ENGINE': 'django.db.backends.sqlite3',
        'NAME': BASE_DIR / 'db.sqlite3',
    }
}

# Internationalization
LANGUAGE_CODE = 'en-us'
TIME_ZONE = 'UTC'
USE_I18N = True
USE_TZ = True

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'

# REST Framework Configuration - frames only, no authentication (see wire)
REST_FRAMEWORK = {
    'DEFAULT_AUTHENTICATION_CLASSES': [],
    'DEFAULT_PERMISSION_CLASSES': [
        'rest_framework.permissions.AllowAny',
    ],
    'DEFAULT_RENDERER_CLASSES': [
        'rest_framework.renderers.JSONRenderer',
    ],
    'UNAUTHENTICATED_USER': None,
}

# PIR laboratory settings
CBPIR = {
    'ADDR': os.getenv('CBPIR_ADDR', '127.0.0.1:7700'),
    'MAX_FRAME': int(os.getenv('CBPIR_MAX_FRAME', str(1 << 30))),  # bytes
    'DATABASE_PATH': os.getenv('CBPIR_DB'),
    'PARAMS_PATH': os.getenv('CBPIR_PARAMS'),
    'IRREDUCIBLE_SEARCH_CAP': 10_000,
    'PLAN_RESAMPLE_CAP': 10_000,
    'ENUMERATION_CAP': 10 ** 6,  # subsets per modified attack
    'INFEASIBLE_LOG2_COST': 100,
    'ATTACK_WORKERS': int(os.getenv('CBPIR_ATTACK_WORKERS', '1')),
}

# Logging Configuration
LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'plain': {
            'format': '{asctime} {levelname} {name} {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'plain',
        },
    },
    'root': {
        'handlers': ['console'],
        'level': 'WARNING',
    },
    'loggers': {
        app: {
            'handlers': ['console'],
            'level': os.getenv('CBPIR_LOG_LEVEL', 'INFO'),
            'propagate': False,
        }
        for app in ('gf', 'matfq', 'lincode', 'scheme', 'attack', 'analysis', 'wire', 'cli')
    },
}
