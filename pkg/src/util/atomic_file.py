import hashlib
import os
import tempfile
from contextlib import contextmanager

from log_config import main_logger

logger = main_logger


@contextmanager
def atomic_write(path, newline=""):
    """
    Yields a text handle on a temporary file next to `path`; the file
    replaces `path` only when the block completes.
    """
    path = os.path.abspath(os.path.expanduser(path))
    directory = os.path.dirname(path)
    os.makedirs(directory, exist_ok=True)

    fd, tmp_path = tempfile.mkstemp(
        prefix="." + os.path.basename(path) + ".", suffix=".tmp", dir=directory
    )
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline=newline) as f:
            yield f
        os.replace(tmp_path, path)
        logger.debug("Wrote '{}'".format(path))
    except BaseException:
        if os.path.exists(tmp_path):
            os.remove(tmp_path)
        raise


def sha256_of(path, chunk_size=1 << 16):
    digest = hashlib.sha256()
    with open(path, "rb") as f:
        for chunk in iter(lambda: f.read(chunk_size), b""):
            digest.update(chunk)
    return digest.hexdigest()
