"""
Command-line entry point: ``extremal-tsirelson <command> [options]``.

Commands are the management commands of the ``tsirelson`` app, written with
hyphens (``verify-w3``) or underscores (``verify_w3``). Exit status is 0 on
success, 1 when a check fails, 2 on malformed input and 3 when a solver does
not converge.
"""
import os
import sys


def main(argv=None):
    """Run one command and exit with its status."""
    argv = list(sys.argv[1:] if argv is None else argv)
    if argv and not argv[0].startswith("-"):
        argv[0] = argv[0].replace("-", "_")
    os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'core.settings')
    from django.core.management import execute_from_command_line

    execute_from_command_line(["extremal-tsirelson", *argv])


if __name__ == "__main__":
    main()
