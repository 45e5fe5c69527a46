from .utils import DEFAULT_LOG_FORMATTER, DEFAULT_LOG_HANDLER, LOG_LEVEL_ENV_VAR, configure_logging
