import concurrent.futures
import contextlib
import logging
import os
import shutil
import tempfile


logger = logging.getLogger(__name__)

THREADS_ENVIRONMENT_VARIABLE = "MMV_THREADS"


def max_workers():
    """ Worker cap read from the MMV_THREADS environment variable.

    Unset, empty or invalid values mean 1, i.e. everything runs in the
    calling thread.
    """
    value = os.environ.get(THREADS_ENVIRONMENT_VARIABLE, "")
    try:
        workers = int(value)
    except ValueError:
        if value:
            logger.warning("Ignoring invalid %s value %r",
                           THREADS_ENVIRONMENT_VARIABLE, value)
        return 1
    return max(workers, 1)


def ordered_map(func, items, workers=None):
    """ ``[func(item) for item in items]``, possibly computed on a thread
    pool.

    Results are returned in the order of ``items`` whatever the
    completion order, and the first exception raised is propagated.

    Parameters
    ----------
    func: callable
    items: iterable
    workers: int, None
        Pool size. Defaults to :func:`max_workers`.
    """
    items = list(items)
    if workers is None:
        workers = max_workers()
    if workers <= 1 or len(items) <= 1:
        return [func(item) for item in items]

    with concurrent.futures.ThreadPoolExecutor(
            max_workers=min(workers, len(items))) as executor:
        return list(executor.map(func, items))


@contextlib.contextmanager
def tempdir():
    d = tempfile.mkdtemp()
    try:
        yield d
    finally:
        shutil.rmtree(d)
