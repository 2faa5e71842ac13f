"""
Timing decorator for verification checks and simulation runs.
"""
import logging
import time
from functools import wraps
from typing import Callable, Dict, List, Optional

logger = logging.getLogger(__name__)

SLOW_MS = 1000
MEDIUM_MS = 500

# name -> recorded durations in ms
_timings: Dict[str, List[float]] = {}


def performance_monitor(func_name: Optional[str] = None):
    """Decorator to monitor function execution time."""
    def decorator(func: Callable) -> Callable:
        @wraps(func)
        def wrapper(*args, **kwargs):
            name = func_name or f"{func.__module__}.{func.__name__}"
            start_time = time.perf_counter()

            try:
                result = func(*args, **kwargs)
                duration = (time.perf_counter() - start_time) * 1000
                _timings.setdefault(name, []).append(duration)

                if duration > SLOW_MS:
                    logger.warning("SLOW: %s took %.0fms", name, duration)
                elif duration > MEDIUM_MS:
                    logger.info("%s took %.0fms", name, duration)
                else:
                    logger.debug("%s took %.0fms", name, duration)

                return result
            except Exception as e:
                duration = (time.perf_counter() - start_time) * 1000
                logger.error("%s failed after %.0fms: %s", name, duration, e)
                raise

        return wrapper
    return decorator


def get_timings() -> Dict[str, List[float]]:
    return {name: list(values) for name, values in _timings.items()}


def reset_timings() -> None:
    _timings.clear()
