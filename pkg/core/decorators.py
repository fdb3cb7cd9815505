import logging
import time
from functools import wraps

from .utils import format_duration

logger = logging.getLogger(__name__)


def timed(action_type):
    """Decorator to log how long an action took."""

    def decorator(func):
        @wraps(func)
        def wrapper(*args, **kwargs):
            started = time.perf_counter()
            logger.info(f"{action_type} started")
            try:
                return func(*args, **kwargs)
            finally:
                elapsed = time.perf_counter() - started
                logger.info(f"{action_type} finished in {format_duration(elapsed)}")
        return wrapper
    return decorator
