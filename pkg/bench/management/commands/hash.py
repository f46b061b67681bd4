import sys

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError

from keccak.functions import VARIANTS, Hasher, get_variant


class Command(BaseCommand):
    help = 'Print the SHA-3 or SHAKE digest of FILE (or standard input) as lowercase hex'
    stealth_options = ('stdin',)

    def add_arguments(self, parser):
        parser.add_argument(
            'file',
            nargs='?',
            default='-',
            help='File to hash; "-" or nothing reads standard input',
        )
        parser.add_argument(
            '--algo',
            default='sha3-256',
            choices=[variant.cli_name for variant in VARIANTS],
            help='Hash function (default: sha3-256)',
        )
        parser.add_argument(
            '--bits',
            type=int,
            help='Output length in bits; required for shake128 and shake256',
        )

    def handle(self, *args, **options):
        variant = get_variant(options['algo'])
        bits = options['bits']
        if variant.is_xof:
            if bits is None:
                raise CommandError(f"--bits is required for {variant.cli_name}", returncode=2)
            if bits < 1:
                raise CommandError('--bits must be at least 1', returncode=2)
        elif bits is not None and bits != variant.digest_bits:
            raise CommandError(
                f"{variant.cli_name} always produces {variant.digest_bits} bits", returncode=2
            )

        hasher = Hasher(variant)
        path = options['file']
        try:
            if path == '-':
                self._absorb(hasher, options.get('stdin') or sys.stdin.buffer)
            else:
                with open(path, 'rb') as stream:
                    self._absorb(hasher, stream)
        except OSError as e:
            raise CommandError(f"Cannot read {path}: {e}", returncode=3)

        self.stdout.write(hasher.digest_bits(bits).hex())

    def _absorb(self, hasher, stream):
        chunk_size = getattr(settings, 'HASH_READ_CHUNK', 65536)
        for chunk in iter(lambda: stream.read(chunk_size), b''):
            hasher.update(chunk)
