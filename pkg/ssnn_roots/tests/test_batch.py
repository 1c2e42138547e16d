#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Test module for batch record parsing, running and report output.
"""
import io
import json
import random

import mock
from django.test import TestCase

from ..batch import (
    CHECK_FUNCTIONAL_EQUATION,
    CHECK_NORM,
    CHECK_REAL_STRIP,
    ERROR,
    EXIT_ERROR,
    EXIT_FAIL,
    EXIT_OK,
    FAIL,
    PASS,
    BatchOptions,
    emit_plot_data,
    exit_code,
    make_records,
    parse_records,
    random_symmetric_delta,
    reports_to_text,
    run_batch,
)
from ..catalog import counterexample_deltas, gorenstein_deltas
from ..poly_core import validate_delta


class ParseRecordsTest(TestCase):
    """ Tests reading JSON-lines and CSV input """

    def setUp(self):
        self.lines = [
            "# SSNN vectors",
            "",
            '{"delta": ["1", "0", "1"], "label": "hexagon"}',
            "1,6,1",
            '{"delta": [1, -1, 1]}',
            "{not json",
            "1",
            "1, 1/2, x",
        ]

    def test_skips_comments_and_blank_lines(self):
        records = list(parse_records(self.lines))
        self.assertEqual([record.seq for record in records], [1, 2, 3, 4, 5, 6])
        self.assertEqual([record.line for record in records], [3, 4, 5, 6, 7, 8])

    def test_valid_records(self):
        first, second = list(parse_records(self.lines))[:2]
        self.assertIsNone(first.error)
        self.assertEqual(first.delta, validate_delta((1, 0, 1)))
        self.assertEqual(first.payload['label'], "hexagon")
        self.assertEqual(second.delta, validate_delta((1, 6, 1)))

    def test_errors_carry_line_numbers(self):
        broken = list(parse_records(self.lines))[2:]
        for record in broken:
            self.assertIsNotNone(record.error)
            self.assertEqual(record.error.line, record.line)

    def test_errors_become_reports(self):
        reports = run_batch(list(parse_records(self.lines)), 'roots')
        self.assertEqual([report.status for report in reports], [PASS, PASS, ERROR, ERROR, ERROR, ERROR])
        self.assertEqual(reports[2].error['line'], 5)
        self.assertEqual(reports[2].error['type'], 'ParseError')
        self.assertEqual(exit_code(reports), EXIT_ERROR)


class RunBatchTest(TestCase):
    """ Tests running commands over records """

    def test_counterexamples_fail_the_half_strip(self):
        records = make_records({'delta': entry.delta, 'entry': entry} for entry in counterexample_deltas())
        reports = run_batch(records, 'counterexample')
        self.assertEqual([report.status for report in reports], [FAIL, FAIL])
        self.assertTrue(reports[0].results['published_match'])
        self.assertEqual(reports[0].label, "counterexample-8")
        self.assertEqual(exit_code(reports), EXIT_FAIL)

    def test_catalog_passes(self):
        records = make_records({'delta': entry.delta, 'entry': entry} for entry in gorenstein_deltas(3))
        options = BatchOptions(checks=('strip', CHECK_NORM, CHECK_REAL_STRIP, CHECK_FUNCTIONAL_EQUATION))
        reports = run_batch(records, 'catalog', options)
        self.assertEqual(len(reports), 33)
        self.assertEqual(exit_code(reports), EXIT_OK)
        for report in reports:
            self.assertLess(report.results['closed_form_deviation'], 1e-12)
            self.assertTrue(report.results['in_ssnn_root_set'])
            self.assertTrue(report.results['functional_equation'])

    def test_order_is_kept_with_workers(self):
        rng = random.Random(7)
        records = make_records({'delta': random_symmetric_delta(rng, 8)} for _ in range(12))
        reports = run_batch(records, 'verify', BatchOptions(jobs=4))
        self.assertEqual([report.seq for report in reports], list(range(1, 13)))
        self.assertEqual([report.descriptor['delta'] for report in reports],
                         [[str(entry) for entry in record.delta] for record in records])

    def test_realize(self):
        reports = run_batch(make_records([{'d': 4, 'target': '-6/5'}, {'d': 4, 'target': '3'}]), 'realize')
        self.assertEqual(reports[0].status, PASS)
        self.assertEqual(reports[0].results['a'], "53/11")
        self.assertEqual(reports[0].results['realized_roots'], "-6/5, 1/5")
        self.assertEqual(reports[0].results['parity'], "even")
        self.assertEqual(reports[0].results['reduced_quadratic'], ["-18/11", "75/11", "75/11"])
        self.assertTrue(reports[0].results['factorization'])
        self.assertEqual(reports[1].status, ERROR)
        self.assertEqual(reports[1].error['type'], 'TargetOutOfRange')

    def test_quartic_on_the_bound(self):
        report, = run_batch(make_records([{'b': 0, 'c': 41, 'd': 5}]), 'quartic')
        self.assertEqual(report.status, PASS)
        self.assertTrue(report.results['find_roots_agrees'])
        self.assertEqual(report.results['region'], 'first_complex_regime')

    def test_quartic_inadmissible(self):
        report, = run_batch(make_records([{'b': -1, 'c': 10, 'd': 4}]), 'quartic')
        self.assertEqual(report.status, FAIL)
        self.assertEqual(report.results['region'], 'inadmissible')
        self.assertIsNone(report.root_set)

    def test_unknown_command(self):
        with self.assertRaises(ValueError):
            run_batch([], 'plot')

    @mock.patch('ssnn_roots.batch.logging_batch_step')
    def test_every_record_is_logged(self, m_log):
        records = make_records([{'delta': validate_delta((1, 0, 1))}, {'delta': validate_delta((1, 2, 1))}])
        run_batch(records, 'roots')
        self.assertEqual(m_log.call_count, 2)
        level, _ = m_log.call_args[0]
        self.assertEqual(level, "info")


class ReportOutputTest(TestCase):
    """ Tests the serialized reports and plot data """

    def setUp(self):
        records = make_records({'delta': entry.delta, 'entry': entry} for entry in gorenstein_deltas(2))
        self.reports = run_batch(records, 'catalog')

    def test_jsonl(self):
        lines = reports_to_text(self.reports).splitlines()
        self.assertEqual(len(lines), 7)
        first = json.loads(lines[0])
        self.assertEqual(first['status'], PASS)
        self.assertEqual(first['input']['label'], "gorenstein-2-b1")
        self.assertEqual(first['input']['delta'], ["1", "1", "1"])
        self.assertEqual(len(first['roots']), 2)
        self.assertEqual(first['checks'][0]['kind'], 'half_strip')

    def test_csv(self):
        lines = reports_to_text(self.reports, 'csv').splitlines()
        self.assertEqual(lines[0], "seq,command,status,label,input,precision,roots,checks,error")
        self.assertEqual(len(lines), 8)

    def test_plot_data(self):
        stream = io.StringIO()
        emit_plot_data(self.reports, stream)
        rows = stream.getvalue().splitlines()
        self.assertEqual(rows[0], "series\tlabel\tre\tim")
        self.assertEqual(sum(1 for row in rows if row.startswith("root\t")), 14)
        self.assertEqual(sum(1 for row in rows if row.startswith("norm_disk\t")), 65)

    def test_plot_data_without_reports(self):
        stream = io.StringIO()
        self.assertEqual(emit_plot_data([], stream), 0)
        self.assertEqual(stream.getvalue(), "series\tlabel\tre\tim\n")


class RandomSymmetricDeltaTest(TestCase):
    """ Random inputs of the sweeps """

    def test_shape(self):
        rng = random.Random(1234)
        for _ in range(50):
            v = random_symmetric_delta(rng, 12)
            self.assertTrue(v.symmetric)
            self.assertEqual(v[0], 1)
            self.assertLessEqual(v.degree, 12)

    def test_seeded(self):
        first = [random_symmetric_delta(random.Random(5), 10) for _ in range(3)]
        second = [random_symmetric_delta(random.Random(5), 10) for _ in range(3)]
        self.assertEqual(first, second)
