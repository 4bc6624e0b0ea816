"""
Django settings for project_stable project.

The project hosts no web surface: Django provides configuration, app discovery and the
``manage.py`` command-line entry point for the lattice, conversion and bound-sweep tools.

For the full list of settings and their values, see
https://docs.djangoproject.com/en/5.0/ref/settings/
"""
# project_stable/settings
import os
from pathlib import Path

from dotenv import load_dotenv

# --- 1. Base settings and .env path ---
BASE_DIR = Path(__file__).resolve().parent.parent
load_dotenv(os.path.join(BASE_DIR, ".env"))


# --- 2. Environment variables ---
SECRET_KEY = os.getenv("DJANGO_SECRET_KEY", "stable-local-only")
DEBUG = os.getenv("DJANGO_DEBUG", "False").lower() in ("true", "1", "t")
SQLITE_NAME = os.getenv("SQLITE_NAME", "db.sqlite3")
STABLE_THREADS = int(os.getenv("STABLE_THREADS", "1") or "1")
STABLE_LOG_LEVEL = os.getenv("STABLE_LOG_LEVEL", "INFO")


# --- 3. Core Django settings ---
ALLOWED_HOSTS: list[str] = []
LANGUAGE_CODE = "en-us"
TIME_ZONE = "UTC"
USE_I18N = False
USE_TZ = True
DEFAULT_AUTO_FIELD = "django.db.models.BigAutoField"


# --- 4. Installed apps ---
INSTALLED_APPS = [
    "apps.common",
    "apps.gf2",
    "apps.stab",
    "apps.graphs",
    "apps.codes",
    "apps.noise",
    "apps.le",
    "apps.cli",
]


# --- 5. Database (unused by the library, required by the test runner) ---
DATABASES = {
    "default": {
        "ENGINE": "django.db.backends.sqlite3",
        "NAME": BASE_DIR / SQLITE_NAME,
    }
}


# --- 6. Module configuration ---
STABLE_CONFIG = {
    "STAB": {
        "FORCED_PAIR_ATTEMPTS": 64,
    },
    "LE": {
        "DENSE_MAX_QUBITS": 14,
        "DENSITY_MAX_QUBITS": 12,
        "RLE_MAX_QUBITS": 9,
        "EIGEN_TOLERANCE": 1e-12,
        "STATE_TOLERANCE": 1e-10,
        "THREADS": STABLE_THREADS,
    },
    "SWEEP": {
        "THREADS": STABLE_THREADS,
        "FLOAT_DIGITS": 12,
        "CSV_COLUMNS": [
            "d",
            "q",
            "kind",
            "bound",
            "value",
            "n_x",
            "n_z",
            "n_min",
            "n_lc_mean",
            "n_samples",
            "seed",
        ],
    },
}


# --- 7. Logging ---
LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "verbose": {"format": "%(levelname)s %(asctime)s %(module)s %(message)s"},
    },
    "handlers": {
        "console": {"class": "logging.StreamHandler", "formatter": "verbose"},
    },
    "root": {"handlers": ["console"], "level": STABLE_LOG_LEVEL},
}
