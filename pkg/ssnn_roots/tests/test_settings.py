"""
Tests for the settings layer and the batch step logging.
"""
from fractions import Fraction

import mock
from django.test import TestCase, override_settings

from ..logging import logging_batch_step
from ..settings import production
from ..utils import plugin_setting


class CoerceEnvValueTest(TestCase):
    """ Environment strings take the type of the default """

    def test_types(self):
        self.assertEqual(production.coerce_env_value("256", 128), 256)
        self.assertEqual(production.coerce_env_value("1/3", Fraction(1, 2)), Fraction(1, 3))
        self.assertTrue(production.coerce_env_value("yes", False))
        self.assertEqual(production.coerce_env_value("ssnn_roots.backends.companion_np_v1", "x"),
                         "ssnn_roots.backends.companion_np_v1")

    def test_bad_integer(self):
        with self.assertRaises(ValueError):
            production.coerce_env_value("many", 1)


class ProductionSettingsTest(TestCase):
    """ The environment overlays the common defaults """

    def test_env_tokens_override_defaults(self):
        settings = production.SettingsClass()
        settings.ENV_TOKENS = {'SSNN_ROOTS_PRECISION_BITS': '512', 'SSNN_ROOTS_UNKNOWN': '1'}
        production.plugin_settings(settings)
        self.assertEqual(settings.SSNN_ROOTS_PRECISION_BITS, 512)
        self.assertEqual(settings.SSNN_ROOTS_MAX_ITERATIONS, 200)
        self.assertFalse(hasattr(settings, 'SSNN_ROOTS_UNKNOWN'))


class PluginSettingTest(TestCase):
    """ Library code reads SSNN_ROOTS_* with a fallback """

    @override_settings(SSNN_ROOTS_NUDGE_RETRIES=3)
    def test_reads_settings(self):
        self.assertEqual(plugin_setting('NUDGE_RETRIES', 8), 3)

    def test_default(self):
        self.assertEqual(plugin_setting('NOT_A_SETTING', 'fallback'), 'fallback')


class LoggingBatchStepTest(TestCase):
    """ Batch step log lines """

    @mock.patch('ssnn_roots.logging.LOG')
    def test_info(self, m_log):
        record = mock.Mock(seq=4, payload={'delta': (1, 0, 1)})
        command = 'verify'
        logging_batch_step("info", "done", **locals())
        message = m_log.info.call_args[0][0]
        self.assertIn("BATCH-STEP:test_info", message)
        self.assertIn("RECORD:4", message)
        self.assertIn("COMMAND:verify", message)
        self.assertEqual(m_log.info.call_args[1]['extra'], {})

    @override_settings(SSNN_ROOTS_LOG_LEVEL="DEBUG")
    @mock.patch('ssnn_roots.logging.LOG')
    def test_debug_attaches_payload(self, m_log):
        record = mock.Mock(seq=1, payload={'delta': (1, 0, 1)})
        logging_batch_step("error", "failed", record=record, config="cfg")
        extra = m_log.exception.call_args[1]['extra']
        self.assertIn("'delta'", extra['payload'])
        self.assertEqual(extra['config'], "'cfg'")
