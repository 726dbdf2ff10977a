import os
from concurrent.futures import ThreadPoolExecutor

from Constants import DEFAULT_THREADS, THREADS_ENV_VAR
from exception.configuration import ConfigurationException
from log_config import main_logger

logger = main_logger.getChild("parallel")


def thread_count():
    value = os.environ.get(THREADS_ENV_VAR)
    if value is None or value.strip() == "":
        return DEFAULT_THREADS
    try:
        threads = int(value)
    except ValueError:
        raise ConfigurationException(
            "{} must be a positive integer, got '{}'".format(THREADS_ENV_VAR, value),
            THREADS_ENV_VAR,
        )
    if threads < 1:
        raise ConfigurationException(
            "{} must be a positive integer, got '{}'".format(THREADS_ENV_VAR, value),
            THREADS_ENV_VAR,
        )
    return threads


def ordered_map(func, items, threads=None):
    """func over items, results in input order, on at most `threads` workers."""
    items = list(items)
    threads = thread_count() if threads is None else threads
    if threads <= 1 or len(items) <= 1:
        return [func(item) for item in items]

    logger.debug("Mapping {} items on {} threads".format(len(items), threads))
    with ThreadPoolExecutor(max_workers=threads, thread_name_prefix="score") as pool:
        return list(pool.map(func, items))
