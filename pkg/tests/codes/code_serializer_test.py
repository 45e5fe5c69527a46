import numpy as np
import pytest

from gatebound.codes import (CodeFormatException, InconsistentStabilizerException, build_bacon_shor, build_toric,
                             load_code, save_code, build_reed_muller)


def test_roundtrip_toric(tmpdir):
    code = build_toric(3)
    path = str(tmpdir.join('toric.code'))
    save_code(code, path)
    loaded = load_code(path)
    assert loaded.name == code.name
    assert loaded.metadata == code.metadata
    assert [str(row) for row in loaded.gauge] == [str(row) for row in code.gauge]
    assert np.array_equal(loaded.stabilizer.matrix, code.stabilizer.matrix)
    assert np.array_equal(loaded.geometry.coords, code.geometry.coords)
    assert loaded.geometry.periodic == code.geometry.periodic
    assert loaded.geometry.xi == code.geometry.xi
    assert loaded.k == 2


def test_roundtrip_without_geometry(tmpdir):
    path = str(tmpdir.join('steane.code'))
    save_code(build_reed_muller(3), path)
    loaded = load_code(path)
    assert loaded.geometry is None
    assert loaded.k == 1


def test_roundtrip_subsystem_code(tmpdir):
    path = str(tmpdir.join('bs.code'))
    save_code(build_bacon_shor(3), path)
    loaded = load_code(path)
    assert loaded.stabilizer_rank == 4
    assert loaded.geometry.periodic == (False, False)


def _write(tmpdir, text):
    path = tmpdir.join('bad.code')
    path.write(text)
    return str(path)


def test_minus_one_stabilizer_is_rejected(tmpdir):
    path = _write(tmpdir, 'gatebound-code 1\nn 2\ngenerators 2\n+ZZ\n-ZZ\nend\n')
    with pytest.raises(InconsistentStabilizerException):
        load_code(path)


@pytest.mark.parametrize('text, line_number', [
    ('not a code\n', 1),
    ('gatebound-code 1\nn 2\ngenerators 1\n+ZQ\nend\n', 4),
    ('gatebound-code 1\nn 2\ngenerators 1\n+ZZZ\nend\n', 4),
    ('gatebound-code 1\nn two\n', 2),
    ('gatebound-code 1\nn 2\nbogus 1\n', 3),
    ('gatebound-code 1\nn 2\ngenerators 1\n+ZZ\n', 4),
    ('gatebound-code 1\nn 2\ngeometry D=1 L=2 periodic=1 xi=1\ngenerators 1\n+ZZ\nend\n', 6),
    ('gatebound-code 1\nn 2\ngeometry D=1 L=2 periodic=1 xi=1\ngenerators 1\n+ZZ\ncoords\n0\n7\nend\n', 3),
    ('gatebound-code 1\nn 2\ngenerators 1\n+ZZ\nend\nextra\n', 6),
])
def test_parse_errors_carry_line_numbers(tmpdir, text, line_number):
    with pytest.raises(CodeFormatException) as info:
        load_code(_write(tmpdir, text))
    assert info.value.line_number == line_number


def test_missing_file(tmpdir):
    with pytest.raises(CodeFormatException):
        load_code(str(tmpdir.join('missing.code')))
