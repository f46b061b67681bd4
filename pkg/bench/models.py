import uuid

from django.db import models, transaction


class TimeStampedModel(models.Model):
    """Abstract base class with self-updating created and updated fields."""
    created_at = models.DateTimeField(auto_now_add=True)
    updated_at = models.DateTimeField(auto_now=True)

    class Meta:
        abstract = True


class BackendChoice(models.TextChoices):
    SEQUENTIAL = 'sequential', 'Sequential'
    PARALLEL = 'parallel', 'Parallel'


class BenchmarkRun(TimeStampedModel):
    """One saved ``bench`` sweep and the parameters it ran with."""

    id = models.UUIDField(primary_key=True, default=uuid.uuid4, editable=False)
    variant = models.CharField(max_length=20)
    message_size = models.PositiveIntegerField()
    seed = models.BigIntegerField()
    backends = models.CharField(max_length=50, help_text='Comma-separated backend names')
    workers = models.PositiveIntegerField()
    chunk_size = models.PositiveIntegerField(null=True, blank=True, help_text='Empty means automatic')
    repeats = models.PositiveIntegerField()
    label = models.CharField(max_length=100, blank=True)
    fingerprint = models.CharField(
        max_length=64,
        blank=True,
        help_text='SHA3-256 over the digests of the smallest workload'
    )

    class Meta:
        ordering = ['-created_at']
        verbose_name = 'Benchmark Run'
        verbose_name_plural = 'Benchmark Runs'

    def __str__(self):
        return f"{self.variant} x{self.message_size}B ({self.backends}) - {self.created_at}"

    @classmethod
    def record(cls, spec, records, workers, chunk_size=None, repeats=3, label='', fingerprint=''):
        """Persist a run together with one BenchmarkResult per record."""
        backends = sorted({record.backend.value for record in records})
        with transaction.atomic():
            run = cls.objects.create(
                variant=spec.variant.cli_name,
                message_size=spec.message_size,
                seed=spec.seed,
                backends=','.join(backends),
                workers=workers,
                chunk_size=chunk_size,
                repeats=repeats,
                label=label,
                fingerprint=fingerprint,
            )
            BenchmarkResult.objects.bulk_create([
                BenchmarkResult(
                    run=run,
                    total_bytes=record.total_bytes,
                    message_size=record.message_size,
                    message_count=record.message_count,
                    backend=record.backend.value,
                    time_seconds=record.time_seconds,
                    throughput_bps=record.throughput_bps,
                    repeats=record.repeats,
                )
                for record in records
            ])
        return run


class BenchmarkResult(TimeStampedModel):
    """One measured row of a saved run."""

    id = models.UUIDField(primary_key=True, default=uuid.uuid4, editable=False)
    run = models.ForeignKey(BenchmarkRun, on_delete=models.CASCADE, related_name='results')
    total_bytes = models.PositiveBigIntegerField()
    message_size = models.PositiveIntegerField()
    message_count = models.PositiveBigIntegerField()
    backend = models.CharField(max_length=20, choices=BackendChoice.choices)
    time_seconds = models.FloatField()
    throughput_bps = models.FloatField()
    repeats = models.PositiveIntegerField()

    class Meta:
        ordering = ['total_bytes', 'backend']
        verbose_name = 'Benchmark Result'
        verbose_name_plural = 'Benchmark Results'

    def __str__(self):
        return f"{self.total_bytes} bytes on {self.backend}: {self.throughput_bps:.2f} B/s"

    def to_record(self):
        from .reports import BenchmarkRecord

        return BenchmarkRecord(
            total_bytes=self.total_bytes,
            message_size=self.message_size,
            message_count=self.message_count,
            backend=self.backend,
            time_seconds=self.time_seconds,
            throughput_bps=self.throughput_bps,
            repeats=self.repeats,
        )
