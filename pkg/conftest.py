"""Configure Django before pytest collects the apps' tests.py modules."""

import os

import django

os.environ.setdefault("DJANGO_SETTINGS_MODULE", "chordweight.settings")
django.setup()
