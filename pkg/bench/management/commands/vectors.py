from django.core.management.base import BaseCommand, CommandError

from keccak.functions import VARIANTS

from ...exceptions import VectorFileError
from ...services import verify_vectors


class Command(BaseCommand):
    help = 'Verify SHA-3 / SHAKE known-answer vectors from a response (.rsp) file'

    def add_arguments(self, parser):
        parser.add_argument('--file', required=True, metavar='PATH', help='Response file to verify')
        parser.add_argument(
            '--algo',
            choices=[variant.cli_name for variant in VARIANTS],
            help='Hash function the file tests (default: read from the file header)',
        )

    def handle(self, *args, **options):
        path = options['file']
        try:
            report = verify_vectors(path, options['algo'])
        except VectorFileError as e:
            raise CommandError(f"{path}: {e}", returncode=2)
        except UnicodeDecodeError:
            raise CommandError(f"{path}: not a text response file", returncode=2)
        except OSError as e:
            raise CommandError(f"Cannot read {path}: {e}", returncode=3)

        for outcome in report.failed:
            self.stdout.write(self.style.ERROR(f"FAIL {outcome.describe()}"))
        for outcome in report.skipped:
            self.stdout.write(self.style.WARNING(f"SKIP {outcome.describe()}"))

        summary = (
            f"{len(report.passed)} passed, {len(report.failed)} failed, "
            f"{len(report.skipped)} skipped"
        )
        if not report.ok:
            raise CommandError(summary, returncode=1)
        self.stdout.write(self.style.SUCCESS(summary))
