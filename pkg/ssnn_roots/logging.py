"""
The logging module defines functions that are used for the logging of the
batch steps.
"""
import logging
import sys
from pprint import pformat

from django.conf import settings

LOG = logging.getLogger(__name__)


def logging_batch_step(level, log_message, **local_vars):
    """
    Log an info or error level message describing one step of a batch run.

    If the SSNN_ROOTS_LOG_LEVEL setting is DEBUG then the record payload and the
    solver configuration are attached to the log record, otherwise only the
    step name, the record sequence number, the command and the message are shown.

    Arguments:
        - level: "error" logs with LOG.exception (call it from an except block),
                anything else logs at INFO.
        - log_message: Custom message to be shown in the log.
        - local_vars: local variables of the caller, usually **locals(). The keys
                `record`, `command` and `config` are used when present.
    """
    extra_info = {}
    record = local_vars.get("record")
    command = local_vars.get("command")

    message = "BATCH-STEP:{step} - RECORD:{seq} - COMMAND:{command} - MESSAGE:{msg}".format(
        step=sys._getframe(1).f_code.co_name,  # pylint: disable=protected-access
        seq=getattr(record, "seq", ""),
        command=getattr(command, "name", command or ""),
        msg=log_message,
    )

    if str(getattr(settings, "SSNN_ROOTS_LOG_LEVEL", "")).lower() == "debug":
        extra_info["payload"] = pformat(getattr(record, "payload", None))
        extra_info["config"] = pformat(local_vars.get("config"))

    if level.lower() == "error":
        LOG.exception(message, extra=extra_info)
    else:
        LOG.info(message, extra=extra_info)
