"""Configure Django before pytest collects the tsirelson test suite."""
import os

import django

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'core.settings')
django.setup()
