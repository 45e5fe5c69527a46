"""
the line oriented code interchange format::

    gatebound-code 1
    name toric-3
    meta family=toric param=3
    n 18
    geometry D=2 L=3 periodic=1,1 xi=2
    generators 18
    +XXIIII...
    ...
    coords
    0 0
    ...
    end

blank lines and lines starting with '#' are ignored. 'name', 'meta' and 'geometry' are optional;
'coords' (one line of D integers per qubit) is required exactly when 'geometry' is given.
"""
import os
from abc import ABCMeta, abstractmethod
from typing import Dict, List, Optional, Tuple

from gatebound.codes.lattice_geometry import InvalidGeometryException, LatticeGeometry
from gatebound.codes.subsystem_code import SubsystemCode, derive_structure
from gatebound.pauli import PauliFormatException, PauliOperator, SymplecticBasis
from gatebound.utils import KwargsException
from gatebound.utils.filesystem import atomic_write

FORMAT_HEADER = 'gatebound-code 1'


class CodeFormatException(KwargsException):
    """
    raised when a code file can't be parsed or describes an invalid code.
    the line number (1-based, if known) is in kwargs['line_number']
    """

    @property
    def line_number(self) -> Optional[int]:
        return self.kwargs.get('line_number')


class CodeSerializerBase(metaclass=ABCMeta):
    """
    a base class for code serializers
    """

    @abstractmethod
    def serialize(self, code: SubsystemCode) -> bytes:
        """
        serializes the code to bytes

        :param code: the code to serialize
        :return: the serialized bytes
        """
        pass

    @abstractmethod
    def deserialize(self, data: bytes) -> SubsystemCode:
        """
        deserializes bytes into a code (running all the structural checks)

        :param data: the bytes to deserialize
        :return: the code
        """
        pass


class TextCodeSerializer(CodeSerializerBase):
    """
    the lossless line oriented text format
    """

    def serialize(self, code: SubsystemCode) -> bytes:
        lines = [FORMAT_HEADER]
        if code.name:
            lines.append(f'name {code.name}')
        if code.metadata:
            lines.append('meta ' + ' '.join(f'{key}={value}' for key, value in sorted(code.metadata.items())))
        lines.append(f'n {code.n}')
        geometry = code.geometry
        if geometry is not None:
            periodic = ','.join(str(int(flag)) for flag in geometry.periodic)
            lines.append(f'geometry D={geometry.dimension} L={geometry.size} periodic={periodic} xi={geometry.xi}')
        lines.append(f'generators {len(code.gauge)}')
        lines.extend(str(row) for row in code.gauge)
        if geometry is not None:
            lines.append('coords')
            lines.extend(' '.join(str(int(v)) for v in point) for point in geometry.coords)
        lines.append('end')
        return ('\n'.join(lines) + '\n').encode('utf-8')

    def deserialize(self, data: bytes) -> SubsystemCode:
        try:
            text = data.decode('utf-8')
        except UnicodeDecodeError as ex:
            raise CodeFormatException('Code file is not utf-8 text') from ex
        return _CodeFileParser(text).parse()


class _CodeFileParser:
    def __init__(self, text: str):
        self._lines: List[Tuple[int, str]] = [(number, line.strip())
                                              for number, line in enumerate(text.splitlines(), start=1)
                                              if line.strip() and not line.strip().startswith('#')]
        self._position = 0

    def _next(self, expected: str) -> Tuple[int, str]:
        if self._position >= len(self._lines):
            last = self._lines[-1][0] if self._lines else 0
            raise CodeFormatException(f'Unexpected end of file, expected {expected}', line_number=last)
        item = self._lines[self._position]
        self._position += 1
        return item

    @staticmethod
    def _int(value: str, line_number: int, what: str) -> int:
        try:
            return int(value)
        except ValueError:
            raise CodeFormatException(f'Line {line_number}: {what} must be an integer, got {value!r}',
                                      line_number=line_number) from None

    @staticmethod
    def _key_values(tokens: List[str], line_number: int) -> Dict[str, str]:
        result: Dict[str, str] = {}
        for token in tokens:
            key, sep, value = token.partition('=')
            if not sep or not key:
                raise CodeFormatException(f'Line {line_number}: expected key=value, got {token!r}',
                                          line_number=line_number)
            result[key] = value
        return result

    def parse(self) -> SubsystemCode:
        line_number, line = self._next('the format header')
        if line != FORMAT_HEADER:
            raise CodeFormatException(f'Line {line_number}: expected {FORMAT_HEADER!r}', line_number=line_number)

        name = ''
        metadata: Dict[str, str] = {}
        n: Optional[int] = None
        geometry_fields: Optional[Dict[str, str]] = None
        geometry_line = 0
        while True:
            line_number, line = self._next("'generators'")
            keyword, _, rest = line.partition(' ')
            if keyword == 'name':
                name = rest.strip()
            elif keyword == 'meta':
                metadata.update(self._key_values(rest.split(), line_number))
            elif keyword == 'n':
                n = self._int(rest.strip(), line_number, 'n')
                if n < 1:
                    raise CodeFormatException(f'Line {line_number}: n must be positive', line_number=line_number)
            elif keyword == 'geometry':
                geometry_fields = self._key_values(rest.split(), line_number)
                geometry_line = line_number
            elif keyword == 'generators':
                break
            else:
                raise CodeFormatException(f'Line {line_number}: unknown keyword {keyword!r}', line_number=line_number)
        if n is None:
            raise CodeFormatException(f"Line {line_number}: 'n' must come before 'generators'",
                                      line_number=line_number)
        count = self._int(rest.strip(), line_number, 'generator count')

        generators: List[PauliOperator] = []
        for _ in range(count):
            line_number, line = self._next('a generator')
            try:
                operator = PauliOperator.parse(line)
            except PauliFormatException as ex:
                raise CodeFormatException(f'Line {line_number}: {ex}', line_number=line_number) from ex
            if operator.n != n:
                raise CodeFormatException(f'Line {line_number}: generator acts on {operator.n} qubits, expected {n}',
                                          line_number=line_number)
            generators.append(operator)

        geometry: Optional[LatticeGeometry] = None
        line_number, line = self._next("'coords' or 'end'")
        if line == 'coords':
            if geometry_fields is None:
                raise CodeFormatException(f"Line {line_number}: 'coords' without a 'geometry' line",
                                          line_number=line_number)
            geometry = self._parse_geometry(geometry_fields, geometry_line, n)
            line_number, line = self._next("'end'")
        elif geometry_fields is not None:
            raise CodeFormatException(f"Line {line_number}: 'geometry' given but no 'coords' block",
                                      line_number=line_number)
        if line != 'end':
            raise CodeFormatException(f"Line {line_number}: expected 'end', got {line!r}", line_number=line_number)
        if self._position != len(self._lines):
            extra = self._lines[self._position][0]
            raise CodeFormatException(f"Line {extra}: content after 'end'", line_number=extra)

        try:
            return derive_structure(SymplecticBasis(n, generators), geometry, name=name, metadata=metadata)
        except InvalidGeometryException as ex:
            raise CodeFormatException(f'Invalid geometry: {ex}', line_number=geometry_line) from ex

    def _parse_geometry(self, fields: Dict[str, str], geometry_line: int, n: int) -> LatticeGeometry:
        missing = [key for key in ('D', 'L', 'periodic', 'xi') if key not in fields]
        if missing:
            raise CodeFormatException(f'Line {geometry_line}: geometry is missing {missing}',
                                      line_number=geometry_line)
        dimension = self._int(fields['D'], geometry_line, 'D')
        size = self._int(fields['L'], geometry_line, 'L')
        xi = self._int(fields['xi'], geometry_line, 'xi')
        periodic = [self._int(flag, geometry_line, 'periodic flag') != 0 for flag in fields['periodic'].split(',')]
        coords: List[List[int]] = []
        for _ in range(n):
            line_number, line = self._next('a coordinate line')
            values = [self._int(v, line_number, 'coordinate') for v in line.split()]
            if len(values) != dimension:
                raise CodeFormatException(f'Line {line_number}: expected {dimension} coordinates',
                                          line_number=line_number)
            coords.append(values)
        try:
            return LatticeGeometry(dimension=dimension, size=size, coords=coords, periodic=periodic, xi=xi)
        except InvalidGeometryException as ex:
            raise CodeFormatException(f'Line {geometry_line}: {ex}', line_number=geometry_line) from ex


DefaultCodeSerializer = TextCodeSerializer


def save_code(code: SubsystemCode, path: str, serializer: Optional[CodeSerializerBase] = None) -> None:
    """
    writes the code to path (atomically)

    :param code: the code to save
    :param path: the destination path
    :param serializer: the serializer to use (defaults to the text format)
    """
    serializer = serializer or DefaultCodeSerializer()
    atomic_write(path, serializer.serialize(code))


def load_code(path: str, serializer: Optional[CodeSerializerBase] = None) -> SubsystemCode:
    """
    reads and validates a code file

    :param path: the file to read
    :param serializer: the serializer to use (defaults to the text format)
    """
    serializer = serializer or DefaultCodeSerializer()
    if not os.path.isfile(path):
        raise CodeFormatException(f'Code file {path} does not exist', path=path)
    with open(path, 'rb') as f:
        return serializer.deserialize(f.read())
