import json
import logging
from typing import Any

from .settings import LOG_LEVEL


def configure_logging(level: str = LOG_LEVEL) -> None:
    logging.basicConfig(level=getattr(logging, level, logging.INFO))


def log_event(logger: logging.Logger, event: str, level: int = logging.INFO, **fields: Any) -> None:
    # One compact JSON object per line
    if not logger.isEnabledFor(level):
        return
    obj = {"event": event}
    obj.update(fields)
    logger.log(level, json.dumps(obj, separators=(",", ":"), default=str))
