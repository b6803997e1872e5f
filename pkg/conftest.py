import os

import django

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'freeness_backend.settings')
django.setup()

# Mirror what `manage.py test` does before running the suites.
from django.test.utils import setup_test_environment  # noqa: E402

setup_test_environment()
