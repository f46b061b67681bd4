from django.conf import settings
from django.core.management.base import BaseCommand, CommandError
from rest_framework import serializers

from batches.backends import Backend
from batches.exceptions import BatchError
from keccak.functions import VARIANTS

from ...exceptions import BackendMismatchError, BenchError, WorkloadError
from ...reports import emit_report, emit_self_check
from ...serializers import BACKEND_ALIASES, EngineConfigSerializer, WorkloadSpecSerializer
from ...services import BenchmarkService

BACKEND_CHOICES = ['seq', 'par', 'both', 'sequential', 'parallel']


def _validated(serializer):
    """serializer.save(), with validation failures as usage errors."""
    try:
        serializer.is_valid(raise_exception=True)
        return serializer.save()
    except serializers.ValidationError as e:
        raise CommandError(_format_errors(e.detail), returncode=2)


def _format_errors(detail):
    if isinstance(detail, dict):
        return '; '.join(f"{name}: {_format_errors(messages)}" for name, messages in detail.items())
    if isinstance(detail, list):
        return ' '.join(_format_errors(message) for message in detail)
    return str(detail)


class Command(BaseCommand):
    help = 'Measure sequential and batch-parallel hashing throughput over a sweep of workload sizes'

    def add_arguments(self, parser):
        parser.add_argument('--sizes', help='Comma-separated total byte sizes (default: the ten reference sizes)')
        parser.add_argument('--message-size', type=int, help='Bytes per message (default: BENCH_MESSAGE_SIZE)')
        parser.add_argument(
            '--algo',
            choices=[variant.cli_name for variant in VARIANTS],
            help='Hash function (default: BENCH_VARIANT)',
        )
        parser.add_argument('--bits', type=int, help='Output bits per message for shake128/shake256')
        parser.add_argument('--backend', choices=BACKEND_CHOICES, help='Backend to measure (default: HASH_BACKEND)')
        parser.add_argument('--workers', type=int, help='Parallel worker count (default: BATCH_WORKERS)')
        parser.add_argument('--chunk', type=int, help='Messages per task (default: BATCH_CHUNK_SIZE)')
        parser.add_argument('--repeats', type=int, help='Timed runs per row, at least 3 (default: BENCH_REPEATS)')
        parser.add_argument('--seed', type=int, help='Workload seed (default: BENCH_SEED)')
        parser.add_argument('--csv', metavar='PATH', help='Also write the records as CSV to PATH')
        parser.add_argument('--input', metavar='FILE', help='Benchmark FILE cut into message-size slices')
        parser.add_argument('--save', action='store_true', help='Store the run in the database')
        parser.add_argument('--label', default='', help='Label stored with --save')
        parser.add_argument('--history', type=int, metavar='N', help='List the N most recent saved runs and exit')
        parser.add_argument(
            '--self-check',
            action='store_true',
            help='Recompute the reference throughput table and exit',
        )

    def handle(self, *args, **options):
        if options['self_check']:
            return self._self_check()
        if options['history'] is not None:
            return self._history(options['history'])

        backends = self._backends(options['backend'])
        spec = self._workload(options)
        service = self._service(options, backends)

        try:
            if options['input']:
                data = self._read(options['input'])
                outcome = service.run_input(data, spec, backends)
            else:
                outcome = service.run(spec, backends)
        except WorkloadError as e:
            raise CommandError(str(e), returncode=2)
        except BackendMismatchError as e:
            raise CommandError(str(e), returncode=1)
        except (BenchError, BatchError) as e:
            raise CommandError(f"Benchmark failed: {e}", returncode=1)

        self.stdout.write(emit_report(outcome.records, 'console'), ending='')
        self.stdout.write(f"Workload fingerprint: {outcome.fingerprint}")

        if options['csv']:
            try:
                with open(options['csv'], 'w', encoding='utf-8', newline='') as f:
                    f.write(emit_report(outcome.records, 'csv'))
            except OSError as e:
                raise CommandError(f"Cannot write {options['csv']}: {e}", returncode=3)
            self.stdout.write(self.style.SUCCESS(f"Wrote {len(outcome.records)} rows to {options['csv']}"))

        if options['save']:
            run = service.save(spec, outcome, label=options['label'])
            self.stdout.write(self.style.SUCCESS(f"Saved run {run.id}"))

    def _backends(self, choice):
        if choice is None:
            return [Backend(getattr(settings, 'HASH_BACKEND', Backend.PARALLEL.value))]
        if choice == 'both':
            return [Backend.SEQUENTIAL, Backend.PARALLEL]
        return [Backend(BACKEND_ALIASES[choice])]

    def _workload(self, options):
        data = {
            'message_size': options['message_size'] or getattr(settings, 'BENCH_MESSAGE_SIZE', 10),
            'variant': options['algo'] or getattr(settings, 'BENCH_VARIANT', 'sha3-256'),
            'seed': options['seed'] if options['seed'] is not None else getattr(settings, 'BENCH_SEED', 2019),
        }
        if options['sizes']:
            data['sizes'] = options['sizes']
        if options['bits'] is not None:
            data['output_bits'] = options['bits']
        return _validated(WorkloadSpecSerializer(data=data))

    def _service(self, options, backends):
        data = {'backend': backends[0].value}
        if options['workers'] is not None:
            data['worker_count'] = options['workers']
        if options['chunk'] is not None:
            data['chunk_size'] = options['chunk']
        config = _validated(EngineConfigSerializer(data=data))
        repeats = options['repeats']
        if repeats is not None and repeats < 3:
            raise CommandError('--repeats must be at least 3', returncode=2)
        return BenchmarkService(config, repeats=repeats)

    def _read(self, path):
        try:
            with open(path, 'rb') as f:
                return f.read()
        except OSError as e:
            raise CommandError(f"Cannot read {path}: {e}", returncode=3)

    def _self_check(self):
        checked = BenchmarkService.self_check()
        self.stdout.write(emit_self_check(checked), ending='')
        bad = [row for row in checked if not row.ok]
        if bad:
            raise CommandError(f"{len(bad)} reference rows deviate by more than 0.01%", returncode=1)
        self.stdout.write(self.style.SUCCESS(f"All {len(checked)} reference rows agree"))

    def _history(self, limit):
        if limit < 1:
            raise CommandError('--history must be at least 1', returncode=2)
        runs = BenchmarkService.history(limit)
        if not runs:
            self.stdout.write(self.style.WARNING('No saved benchmark runs.'))
            return
        for run in runs:
            label = f" [{run.label}]" if run.label else ''
            self.stdout.write(
                f"{run.id}  {run.created_at:%Y-%m-%d %H:%M:%S}  {run.variant}  "
                f"{run.message_size}B  {run.backends}  workers={run.workers}{label}"
            )
            records = [result.to_record() for result in run.results.all()]
            self.stdout.write(emit_report(records, 'console'), ending='')
