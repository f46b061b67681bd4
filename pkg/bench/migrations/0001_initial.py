# Generated by Django 5.2 on 2026-10-17 09:12

import django.db.models.deletion
import uuid
from django.db import migrations, models


class Migration(migrations.Migration):

    initial = True

    dependencies = [
    ]

    operations = [
        migrations.CreateModel(
            name='BenchmarkRun',
            fields=[
                ('created_at', models.DateTimeField(auto_now_add=True)),
                ('updated_at', models.DateTimeField(auto_now=True)),
                ('id', models.UUIDField(default=uuid.uuid4, editable=False, primary_key=True, serialize=False)),
                ('variant', models.CharField(max_length=20)),
                ('message_size', models.PositiveIntegerField()),
                ('seed', models.BigIntegerField()),
                ('backends', models.CharField(help_text='Comma-separated backend names', max_length=50)),
                ('workers', models.PositiveIntegerField()),
                ('chunk_size', models.PositiveIntegerField(blank=True, help_text='Empty means automatic', null=True)),
                ('repeats', models.PositiveIntegerField()),
                ('label', models.CharField(blank=True, max_length=100)),
                ('fingerprint', models.CharField(blank=True, help_text='SHA3-256 over the digests of the smallest workload', max_length=64)),
            ],
            options={
                'verbose_name': 'Benchmark Run',
                'verbose_name_plural': 'Benchmark Runs',
                'ordering': ['-created_at'],
            },
        ),
        migrations.CreateModel(
            name='BenchmarkResult',
            fields=[
                ('created_at', models.DateTimeField(auto_now_add=True)),
                ('updated_at', models.DateTimeField(auto_now=True)),
                ('id', models.UUIDField(default=uuid.uuid4, editable=False, primary_key=True, serialize=False)),
                ('total_bytes', models.PositiveBigIntegerField()),
                ('message_size', models.PositiveIntegerField()),
                ('message_count', models.PositiveBigIntegerField()),
                ('backend', models.CharField(choices=[('sequential', 'Sequential'), ('parallel', 'Parallel')], max_length=20)),
                ('time_seconds', models.FloatField()),
                ('throughput_bps', models.FloatField()),
                ('repeats', models.PositiveIntegerField()),
                ('run', models.ForeignKey(on_delete=django.db.models.deletion.CASCADE, related_name='results', to='bench.benchmarkrun')),
            ],
            options={
                'verbose_name': 'Benchmark Result',
                'verbose_name_plural': 'Benchmark Results',
                'ordering': ['total_bytes', 'backend'],
            },
        ),
    ]
