import errno
import os
import shutil
import tempfile
import time
from typing import Union

from gatebound.utils import KwargsException

MAX_LOCKFILE_AGE = 60  # max lockfile age in seconds


class AtomicWriteException(KwargsException):
    """
    an exception which is raised when an atomic write fails
    """
    pass


def _acquire_lock(lock_filename: str, timeout: float) -> str:
    deadline = time.time() + timeout
    while True:
        try:
            fd = os.open(lock_filename, os.O_RDWR | os.O_CREAT | os.O_EXCL)
            os.close(fd)
            return lock_filename
        except FileExistsError:
            try:
                file_age = time.time() - os.stat(lock_filename).st_mtime
            except FileNotFoundError:
                continue
            if file_age >= MAX_LOCKFILE_AGE:
                try:
                    os.remove(lock_filename)
                except OSError:
                    pass
                continue
            if time.time() >= deadline:
                raise AtomicWriteException(f'Could not lock {lock_filename}', lock_filename=lock_filename)
            time.sleep(0.05)


def atomic_write(path: str, data: Union[str, bytes], *, lock_timeout: float = 10) -> None:
    """
    writes data to path atomically (hopefully): the data goes to a temp file in the same directory,
    which is then moved over path while holding '<path>.lock'

    :param path: the destination file path
    :param data: the content to write (str is encoded as utf-8)
    :param lock_timeout: seconds to wait for a live lockfile before giving up
    """
    if isinstance(data, str):
        data = data.encode('utf-8')
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp_path = tempfile.mkstemp(prefix='.gatebound-', dir=directory)
    try:
        with os.fdopen(fd, 'wb') as f:
            f.write(data)
        lock_filename = _acquire_lock(path + '.lock', lock_timeout)
        try:
            shutil.move(tmp_path, path)
        except (OSError, IOError) as e:
            if e.errno == errno.ENOENT:
                raise AtomicWriteException(f'Temp file for {path} disappeared', path=path) from e
            raise AtomicWriteException(f'Error writing file {path}', path=path) from e
        finally:
            try:
                os.remove(lock_filename)
            except Exception:
                pass
    finally:
        if os.path.exists(tmp_path):
            try:
                os.remove(tmp_path)
            except Exception:
                pass
