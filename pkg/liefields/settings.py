"""
Django settings for liefields project.

The project hosts one app, `algebra`: the exact Lie-algebra toolkit, its
management commands (the command-line surface) and a small JSON API.

For the full list of settings and their values, see
https://docs.djangoproject.com/en/5.2/ref/settings/
"""

from pathlib import Path
from dotenv import load_dotenv
import os

# Load environment variables from .env file
load_dotenv()

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

# SECURITY WARNING: keep the secret key used in production secret!
SECRET_KEY = os.getenv("DJANGO_SECRET_KEY", "django-insecure-liefields-local-only")

DEBUG = os.getenv("DJANGO_DEBUG", "False").lower() in ("1", "true", "yes")

ALLOWED_HOSTS = [host.strip() for host in os.getenv("DJANGO_ALLOWED_HOSTS", "localhost,127.0.0.1,testserver").split(",") if host.strip()]


# Application definition

INSTALLED_APPS = [
    'django.contrib.contenttypes',
    'django.contrib.auth',
    'rest_framework',
    'algebra',
]

MIDDLEWARE = [
    'django.middleware.security.SecurityMiddleware',
    'django.middleware.common.CommonMiddleware',
]

ROOT_URLCONF = 'liefields.urls'

TEMPLATES = []

WSGI_APPLICATION = 'liefields.wsgi.application'


# Database
# Nothing is persisted; the default is only there so Django's machinery is happy.

DATABASES = {
    'default': {
        'ENGINE': 'django.db.backends.sqlite3',
        'NAME': BASE_DIR / 'db.sqlite3',
    }
}


# Internationalization

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = False

USE_TZ = True

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'

REST_FRAMEWORK = {
    "DEFAULT_AUTHENTICATION_CLASSES": (),
    "DEFAULT_PERMISSION_CLASSES": (
        "rest_framework.permissions.AllowAny",
    ),
    "DEFAULT_RENDERER_CLASSES": (
        "rest_framework.renderers.JSONRenderer",
    ),
    "UNAUTHENTICATED_USER": None,
}


def _env_int(name, default):
    value = os.getenv(name, "").strip()
    return int(value) if value else default


# Toolkit configuration; library calls take None to mean "use these"
LIEFIELDS = {
    "PRECISION": _env_int("LIEFIELDS_PRECISION", 64),
    "SEED": _env_int("LIEFIELDS_SEED", 0),
    "CARTAN_TRIALS": _env_int("LIEFIELDS_CARTAN_TRIALS", 32),
    "WITNESS_BOX": _env_int("LIEFIELDS_WITNESS_BOX", 5),
    "DEFAULT_DEGREE": _env_int("LIEFIELDS_DEFAULT_DEGREE", 3),
    "REALIZATIONS_DIR": os.getenv("LIEFIELDS_REALIZATIONS_DIR") or None,
}

LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "simple": {"format": "{levelname} {name}: {message}", "style": "{"},
    },
    "handlers": {
        "console": {"class": "logging.StreamHandler", "formatter": "simple"},
    },
    "loggers": {
        "algebra": {
            "handlers": ["console"],
            "level": os.getenv("LIEFIELDS_LOG_LEVEL", "WARNING").upper(),
            "propagate": False,
        },
    },
}
