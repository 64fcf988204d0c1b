"""Accessors for the ``VHK`` block of the Django settings."""
from django.conf import settings


def vhk_setting(name):
    """Return one toolkit setting by name"""
    return settings.VHK[name]


def tolerance(override=None):
    """Comparison tolerance, unless the caller passes its own"""
    if override is not None:
        return float(override)
    return float(vhk_setting('TOLERANCE'))
