"""
Settings for ssnn_roots meant for command line runs.

Any SSNN_ROOTS_* setting can be overridden with an environment variable of
the same name. Values are coerced to the type of the default.
"""
import os
from fractions import Fraction

from .common import *  # pylint: disable=wildcard-import, unused-wildcard-import
from .common import plugin_settings as common_plugin_settings

ENV_PREFIX = 'SSNN_ROOTS_'


class SettingsClass:
    """ dummy settings class """


def coerce_env_value(raw, default):
    """
    Convert the raw environment string to the type of the default value.
    """
    if isinstance(default, bool):
        return raw.strip().lower() in ('1', 'true', 'yes', 'on')
    if isinstance(default, int):
        return int(raw)
    if isinstance(default, Fraction):
        return Fraction(raw)
    return raw


def plugin_settings(settings):  # pylint: disable=function-redefined
    """
    Set of settings used for command line runs: the common defaults
    overlaid with the SSNN_ROOTS_* environment.
    """
    common_plugin_settings(settings)
    env_tokens = getattr(settings, 'ENV_TOKENS', {})

    for name in [key for key in vars(settings) if key.startswith(ENV_PREFIX)]:
        if name in env_tokens:
            setattr(settings, name, coerce_env_value(env_tokens[name], getattr(settings, name)))

    LOGGING['loggers']['ssnn_roots']['level'] = settings.SSNN_ROOTS_LOG_LEVEL


SETTINGS = SettingsClass()
SETTINGS.ENV_TOKENS = {key: value for key, value in os.environ.items() if key.startswith(ENV_PREFIX)}
plugin_settings(SETTINGS)
vars().update(SETTINGS.__dict__)
