import functools
import logging
import time

logger = logging.getLogger(__name__)


def timed(func):
    @functools.wraps(func)
    def inner(*args, **kwargs):
        start = time.perf_counter()
        result = func(*args, **kwargs)
        logger.debug('%s took %.3fs', func.__qualname__, time.perf_counter() - start)
        return result

    return inner
