from django.test import SimpleTestCase

from batches.backends import Backend
from bench.exceptions import ReportFormatError
from bench.reports import (
    CSV_COLUMNS, REPORTED_ROWS, BenchmarkRecord, ReportedRow, emit_report, emit_self_check,
    parse_csv_report, self_check, speedups, throughput,
)
from bench.serializers import BenchmarkRecordSerializer, EngineConfigSerializer, WorkloadSpecSerializer
from keccak.functions import SHAKE_128


def record(total, backend, seconds, message_size=10, repeats=3):
    return BenchmarkRecord(
        total_bytes=total,
        message_size=message_size,
        message_count=total // message_size,
        backend=backend,
        time_seconds=seconds,
        throughput_bps=throughput(total, seconds),
        repeats=repeats,
    )


class ThroughputTestCase(SimpleTestCase):
    def test_reference_arithmetic(self):
        self.assertAlmostEqual(throughput(1202, 0.002656), 452560.24, places=2)
        self.assertAlmostEqual(throughput(1202, 0.000431), 2788863.11, places=2)

    def test_zero_time_rejected(self):
        with self.assertRaises(ReportFormatError):
            throughput(1202, 0)

    def test_reference_rows_agree(self):
        checked = self_check()
        self.assertEqual(len(checked), 10)
        self.assertTrue(all(row.ok for row in checked))
        self.assertIn('ok', emit_self_check(checked))

    def test_self_check_flags_deviation(self):
        bad = ReportedRow(1202, 0.002656, 0.000431, 452560.24 * 1.001, 2788863.11)
        [checked] = self_check([bad])
        self.assertFalse(checked.ok)
        self.assertIn('MISMATCH', emit_self_check([checked]))

    def test_record_invariant(self):
        for row in REPORTED_ROWS:
            r = record(row.total_bytes, Backend.SEQUENTIAL, row.cpu_seconds)
            self.assertAlmostEqual(r.throughput_bps * r.time_seconds, r.total_bytes, places=6)


class EmitReportTestCase(SimpleTestCase):
    def setUp(self):
        self.records = [
            record(1202, Backend.SEQUENTIAL, 0.004),
            record(1202, Backend.PARALLEL, 0.001),
            record(4652, Backend.SEQUENTIAL, 0.0123456789),
        ]

    def test_speedup(self):
        self.assertEqual(speedups(self.records), {1202: 4.0})

    def test_speedup_ignores_time_unit(self):
        scaled = [record(r.total_bytes, r.backend, r.time_seconds * 1000) for r in self.records]
        self.assertAlmostEqual(speedups(scaled)[1202], speedups(self.records)[1202])

    def test_console_has_speedup_column(self):
        text = emit_report(self.records, 'console')
        self.assertIn('speedup', text.splitlines()[0])
        self.assertIn('4.00x', text)
        self.assertEqual(len(text.splitlines()), 4)

    def test_console_empty(self):
        self.assertEqual(emit_report([], 'console'), 'No benchmark records.\n')

    def test_csv_layout(self):
        text = emit_report(self.records, 'csv')
        lines = text.split('\n')
        self.assertEqual(lines[0], ','.join(CSV_COLUMNS))
        self.assertEqual(len(lines), 5)
        self.assertEqual(lines[-1], '')
        self.assertNotIn('\r', text)
        self.assertTrue(lines[1].startswith('1202,10,120,sequential,'))

    def test_csv_round_trip(self):
        self.assertEqual(parse_csv_report(emit_report(self.records, 'csv')), self.records)

    def test_unknown_format(self):
        with self.assertRaises(ReportFormatError):
            emit_report(self.records, 'html')

    def test_parse_rejects_wrong_columns(self):
        with self.assertRaises(ReportFormatError):
            parse_csv_report('a,b\n1,2\n')

    def test_parse_rejects_invalid_row(self):
        text = emit_report(self.records, 'csv').replace('sequential', 'gpu', 1)
        with self.assertRaises(ReportFormatError):
            parse_csv_report(text)

    def test_parse_empty(self):
        with self.assertRaises(ReportFormatError):
            parse_csv_report('')


class SerializerTestCase(SimpleTestCase):
    def test_workload_from_strings(self):
        serializer = WorkloadSpecSerializer(data={'sizes': '20, 40', 'variant': 'SHAKE-128', 'message_size': 5})
        self.assertTrue(serializer.is_valid(), serializer.errors)
        spec = serializer.save()
        self.assertEqual(spec.sizes, (20, 40))
        self.assertIs(spec.variant, SHAKE_128)
        self.assertEqual(spec.seed, 2019)

    def test_workload_size_below_message(self):
        serializer = WorkloadSpecSerializer(data={'sizes': '5,100', 'message_size': 10})
        self.assertFalse(serializer.is_valid())
        self.assertIn('sizes', serializer.errors)

    def test_workload_bad_sizes(self):
        serializer = WorkloadSpecSerializer(data={'sizes': '10,abc'})
        self.assertFalse(serializer.is_valid())
        self.assertIn('sizes', serializer.errors)

    def test_workload_unknown_variant(self):
        serializer = WorkloadSpecSerializer(data={'variant': 'md5'})
        self.assertFalse(serializer.is_valid())
        self.assertIn('variant', serializer.errors)

    def test_engine_config(self):
        serializer = EngineConfigSerializer(data={'backend': 'seq', 'worker_count': 2, 'chunk_size': 16})
        self.assertTrue(serializer.is_valid(), serializer.errors)
        config = serializer.save()
        self.assertEqual(config.backend, Backend.SEQUENTIAL)
        self.assertEqual(config.worker_count, 2)
        self.assertEqual(config.chunk_size, 16)

    def test_engine_config_rejects_zero_workers(self):
        serializer = EngineConfigSerializer(data={'backend': 'par', 'worker_count': 0})
        self.assertFalse(serializer.is_valid())
        self.assertIn('worker_count', serializer.errors)

    def test_record_needs_three_repeats(self):
        data = record(1202, Backend.PARALLEL, 0.001).as_row()
        data['repeats'] = 2
        serializer = BenchmarkRecordSerializer(data=data)
        self.assertFalse(serializer.is_valid())
        self.assertIn('repeats', serializer.errors)
