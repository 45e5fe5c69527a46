import os
import time

import pytest

from gatebound.utils.filesystem import MAX_LOCKFILE_AGE, AtomicWriteException, atomic_write


def test_atomic_write_text_and_bytes(tmp_path):
    path = str(tmp_path / 'out.json')
    atomic_write(path, '{"a": 1}\n')
    with open(path, 'r', encoding='utf-8') as f:
        assert f.read() == '{"a": 1}\n'
    atomic_write(path, b'replaced')
    with open(path, 'rb') as f:
        assert f.read() == b'replaced'
    assert sorted(os.listdir(tmp_path)) == ['out.json']


def test_atomic_write_waits_for_a_live_lock(tmp_path):
    path = str(tmp_path / 'out.txt')
    open(path + '.lock', 'w').close()
    with pytest.raises(AtomicWriteException):
        atomic_write(path, 'data', lock_timeout=0.1)
    assert not os.path.exists(path)
    assert sorted(os.listdir(tmp_path)) == ['out.txt.lock']


def test_atomic_write_breaks_a_stale_lock(tmp_path):
    path = str(tmp_path / 'out.txt')
    lock = path + '.lock'
    open(lock, 'w').close()
    stale = time.time() - MAX_LOCKFILE_AGE - 1
    os.utime(lock, (stale, stale))
    atomic_write(path, 'data', lock_timeout=0.1)
    with open(path, 'r', encoding='utf-8') as f:
        assert f.read() == 'data'
    assert not os.path.exists(lock)
