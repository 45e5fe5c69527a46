import logging
import os
import sys
from typing import Optional, Union

LOG_LEVEL_ENV_VAR = 'GATEBOUND_LOG_LEVEL'

DEFAULT_LOG_FORMATTER = logging.Formatter(
    "%(asctime)-15s [%(levelname)s] [PID:%(process)d] %(message)s")
DEFAULT_LOG_HANDLER = logging.StreamHandler(sys.stderr)
DEFAULT_LOG_HANDLER.setFormatter(DEFAULT_LOG_FORMATTER)


def configure_logging(level: Optional[Union[int, str]] = None) -> logging.Logger:
    """
    attaches the default handler to the package logger

    :param level: the log level. if None, it is taken from GATEBOUND_LOG_LEVEL (default WARNING)
    :return: the 'gatebound' logger
    """
    if level is None:
        level = os.environ.get(LOG_LEVEL_ENV_VAR, 'WARNING')
    if isinstance(level, str):
        level = logging.getLevelName(level.upper())
        if not isinstance(level, int):
            level = logging.WARNING
    logger = logging.getLogger('gatebound')
    if DEFAULT_LOG_HANDLER not in logger.handlers:
        logger.addHandler(DEFAULT_LOG_HANDLER)
    logger.setLevel(level)
    return logger
