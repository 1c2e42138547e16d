# -*- coding: utf-8 -*-
""" Configuration for the ssnn_roots django app """
import logging
from importlib import import_module

from django.apps import AppConfig
from django.conf import settings

LOG = logging.getLogger(__name__)


class SsnnRootsConfig(AppConfig):
    """App configuration"""
    name = 'ssnn_roots'
    verbose_name = "SSNN polynomial root analysis"

    def ready(self):
        try:
            import_module(settings.SSNN_ROOTS_SOLVER_BACKEND)
        except ImportError:
            # catalog --export and the exact quartic analysis still work without it.
            LOG.warning("Root solver backend %s could not be imported", settings.SSNN_ROOTS_SOLVER_BACKEND)
