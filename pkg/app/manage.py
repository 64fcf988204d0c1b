#!/usr/bin/env python
"""Command-line entry point: tv, mono, helly and verify subcommands."""
import os
import sys


def main():
    """Dispatch a variation toolkit subcommand."""
    os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'app.settings')
    try:
        from django.core.management import execute_from_command_line
    except ImportError as exc:
        raise ImportError(
            "Couldn't import Django. The toolkit commands run as Django "
            "management commands; install requirements.txt into the "
            "active environment first."
        ) from exc
    execute_from_command_line(sys.argv)


if __name__ == '__main__':
    main()
