"""
Entry point of the ssnn-roots console script.

`ssnn-roots verify --strip half data.jsonl` is `manage.py verify ...` with the
production settings, so SSNN_ROOTS_* environment variables apply.
"""
import os
import sys


def main(argv=None):
    os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'ssnn_roots.settings.production')
    from django.core.management import execute_from_command_line  # pylint: disable=import-outside-toplevel
    argv = list(sys.argv if argv is None else argv)
    execute_from_command_line(['ssnn-roots'] + argv[1:])


if __name__ == '__main__':
    main()
