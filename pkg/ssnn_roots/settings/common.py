"""
Settings for ssnn-roots
"""
from fractions import Fraction

SECRET_KEY = 'a-not-to-be-trusted-secret-key'
INSTALLED_APPS = (
    'ssnn_roots',
)
USE_TZ = True

# Batch output goes to stdout, so every log line is routed to stderr.
LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'batch': {
            'format': '%(asctime)s %(levelname)s %(name)s %(message)s',
        },
    },
    'handlers': {
        'stderr': {
            'class': 'logging.StreamHandler',
            'stream': 'ext://sys.stderr',
            'formatter': 'batch',
        },
    },
    'loggers': {
        'ssnn_roots': {
            'handlers': ['stderr'],
            'level': 'INFO',
            'propagate': False,
        },
    },
}


def plugin_settings(settings):
    """
    Defines ssnn-roots settings with their defaults.

    Every name here can be overridden from the environment when the
    production settings are used, see ssnn_roots.settings.production.
    """
    settings.SSNN_ROOTS_SOLVER_BACKEND = "ssnn_roots.backends.aberth_mp_v1"
    settings.SSNN_ROOTS_PRECISION_BITS = 128
    settings.SSNN_ROOTS_MAX_PRECISION_BITS = 1024
    settings.SSNN_ROOTS_MAX_ITERATIONS = 200
    # Convergence once every correction is below 2^(-bits * factor) * max(1, |z|).
    settings.SSNN_ROOTS_CONVERGENCE_FACTOR = Fraction(1, 2)
    settings.SSNN_ROOTS_SEED = 0
    settings.SSNN_ROOTS_JOBS = 1
    settings.SSNN_ROOTS_ENDPOINT_NUDGE = Fraction(1, 2 ** 40)
    settings.SSNN_ROOTS_NUDGE_RETRIES = 8
    settings.SSNN_ROOTS_LOG_LEVEL = "INFO"
    settings.SSNN_ROOTS_CATALOG_FORMAT_VERSION = 1
