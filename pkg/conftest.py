"""Configure Django for pytest the same way ``app/manage.py`` does."""

import os
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent / 'app'))
os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'app.settings')

import django  # noqa: E402

django.setup()
