"""
Django settings for freeness_backend project.

For more information on this file, see
https://docs.djangoproject.com/en/4.2/topics/settings/

For the full list of settings and their values, see
https://docs.djangoproject.com/en/4.2/ref/settings/
"""

import os
from dotenv import load_dotenv

load_dotenv()
# Build paths inside the project like this: os.path.join(BASE_DIR, ...)
BASE_DIR = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))


# SECURITY WARNING: keep the secret key used in production secret!
SECRET_KEY = os.getenv('SECRET_KEY', 'freeness-local-development-key')

# SECURITY WARNING: don't run with debug turned on in production!
DEBUG = os.getenv('DEBUG') == '1'

ALLOWED_HOSTS = []


# Application definition

INSTALLED_APPS = [
    'exactalg',
    'arrangement',
    'lattice',
    'derivations',
    'classify',
    'extend',
    'cli',
    'api',
]

MIDDLEWARE = [
    'django.middleware.security.SecurityMiddleware',
    'utils.middleware.CustomMiddleware',
]

ROOT_URLCONF = 'freeness_backend.urls'

TEMPLATES = [
    {
        'BACKEND': 'django.template.backends.django.DjangoTemplates',
        'DIRS': [],
        'APP_DIRS': True,
        'OPTIONS': {
            'context_processors': [
                'django.template.context_processors.debug',
                'django.template.context_processors.request',
            ],
        },
    },
]

WSGI_APPLICATION = 'freeness_backend.wsgi.application'


# Database
# The apps are computational and declare no models.

DATABASES = {
    'default': {
        'ENGINE': 'django.db.backends.sqlite3',
        'NAME': os.path.join(BASE_DIR, 'db.sqlite3'),
    }
}

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'


# Internationalization

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = True

USE_TZ = True


# Freeness toolkit

FREENESS_WORKERS = int(os.getenv('FREENESS_WORKERS') or os.cpu_count() or 1)

FREENESS_SEARCH_HEIGHT = int(os.getenv('FREENESS_SEARCH_HEIGHT', '4'))

FREENESS_SEARCH_LIMIT = int(os.getenv('FREENESS_SEARCH_LIMIT', '0'))

FREENESS_LOG_LEVEL = os.getenv('FREENESS_LOG_LEVEL', 'DEBUG' if DEBUG else 'INFO')


# Logging

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'plain': {
            'format': '%(asctime)s %(levelname)s %(name)s %(message)s',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'plain',
        },
    },
    'loggers': {
        app: {
            'handlers': ['console'],
            'level': FREENESS_LOG_LEVEL,
            'propagate': False,
        }
        for app in ('exactalg', 'arrangement', 'lattice', 'derivations', 'classify', 'extend', 'cli', 'api', 'utils')
    },
}
