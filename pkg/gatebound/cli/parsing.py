"""
the small text languages of the command line: regions, gates, loss grids and code names.

regions are ``;`` separated parts, each of them one of::

    all | none | 0,1,5 | 3..7 | box 0..2 x 1..3

gates are ``;`` or whitespace separated, each of them ``NAME@TARGET``::

    Z@j  S@j  T@j  rot(k)@j  CZ@a,b  CCZ@a,b,c

where single-qubit gates may target ``all``.
"""
import os
import re
from dataclasses import dataclass
from typing import Iterator, List, Optional, Sequence, Tuple

import numpy as np

from gatebound.codes import LatticeGeometry, Region, SubsystemCode, build_code, load_code
from gatebound.hierarchy import PhasePolynomial, controlled_z, rotation
from gatebound.utils import KwargsException


class RegionSpecParseException(KwargsException):
    """
    raised for malformed region text. ``position`` is the offset of the offending part
    """

    def __init__(self, *args, position: int, **kwargs):
        super().__init__(*args, position=position, **kwargs)
        self.position = position


class GateSpecParseException(KwargsException):
    """
    raised for malformed gate text. ``position`` is the offset of the offending gate
    """

    def __init__(self, *args, position: int, **kwargs):
        super().__init__(*args, position=position, **kwargs)
        self.position = position


def _parts(text: str, separators: str) -> Iterator[Tuple[int, str]]:
    """
    the non-empty parts of text with their offsets
    """
    for match in re.finditer(f'[^{separators}]+', text):
        stripped = match.group().strip()
        if stripped:
            yield match.start() + match.group().index(stripped), stripped


_RANGE = re.compile(r'^(\d+)\s*\.\.\s*(\d+)$')
_INDEX_LIST = re.compile(r'^\d+(\s*,\s*\d+)*$')


def _parse_range(text: str, position: int) -> Tuple[int, int]:
    match = _RANGE.match(text.strip())
    if match is None:
        raise RegionSpecParseException(f'Expected a range a..b at position {position}, got {text.strip()!r}',
                                       position=position)
    low, high = int(match.group(1)), int(match.group(2))
    if low > high:
        raise RegionSpecParseException(f'Empty range {low}..{high} at position {position}', position=position)
    return low, high


def _parse_box(text: str, position: int, geometry: Optional[LatticeGeometry]) -> List[int]:
    if geometry is None:
        raise RegionSpecParseException(f'A box at position {position} needs a code with geometry',
                                       position=position)
    body = text[len('box'):]
    ranges = [_parse_range(part, position) for part in body.split('x')]
    if len(ranges) != geometry.dimension:
        raise RegionSpecParseException(f'A box on a {geometry.dimension}D lattice needs {geometry.dimension} '
                                       f'ranges, got {len(ranges)} at position {position}', position=position)
    low = np.array([r[0] for r in ranges])
    high = np.array([r[1] for r in ranges])
    inside = ((geometry.coords >= low) & (geometry.coords <= high)).all(axis=1)
    return np.flatnonzero(inside).tolist()


def parse_region(text: str, n: int, geometry: Optional[LatticeGeometry] = None) -> Region:
    """
    parses region text into a region of an n-qubit code

    :param text: the region text
    :param n: the number of qubits
    :param geometry: the lattice, needed for boxes
    """
    qubits = set()
    found_part = False
    for position, part in _parts(text, ';'):
        found_part = True
        lowered = part.lower()
        if lowered == 'all':
            qubits.update(range(n))
        elif lowered == 'none':
            continue
        elif lowered.startswith('box'):
            qubits.update(_parse_box(part, position, geometry))
        elif _RANGE.match(part):
            low, high = _parse_range(part, position)
            qubits.update(range(low, high + 1))
        elif _INDEX_LIST.match(part):
            qubits.update(int(index) for index in part.split(','))
        else:
            raise RegionSpecParseException(f'Unexpected region part {part!r} at position {position}',
                                           position=position)
    if not found_part:
        raise RegionSpecParseException('Region text is empty', position=0)
    out_of_range = sorted(q for q in qubits if q >= n)
    if out_of_range:
        raise RegionSpecParseException(f'Qubits {out_of_range[:5]} are outside [0, {n})', position=0)
    return Region(sorted(qubits), n)


@dataclass(frozen=True)
class GateSpec:
    """
    :param name: 'rot', 'CZ' or 'CCZ' (Z, S and T are rotations with k = 1, 2, 3)
    :param k: the rotation exponent (diag(1, exp(2 pi i / 2^k))), unused for controlled gates
    :param qubits: the target qubits
    """
    name: str
    k: int
    qubits: Tuple[int, ...]

    @property
    def is_single_qubit(self) -> bool:
        return self.name == 'rot'


_GATE = re.compile(r'^(?P<name>[A-Za-z]+)(\((?P<k>\d+)\))?@(?P<target>.+)$')
_ROTATIONS = {'Z': 1, 'S': 2, 'T': 3}
_CONTROLLED = {'CZ': 2, 'CCZ': 3}


def parse_gates(text: str, n: Optional[int] = None) -> List[GateSpec]:
    """
    parses gate text. ``all`` targets expand to one gate per qubit and need n

    :param text: the gate text
    :param n: the number of qubits (when known, targets are range checked)
    """
    gates: List[GateSpec] = []
    for position, part in _parts(text, r';\s'):
        match = _GATE.match(part)
        if match is None:
            raise GateSpecParseException(f'Expected NAME@TARGET at position {position}, got {part!r}',
                                         position=position)
        name = match.group('name')
        upper = name.upper()
        target = match.group('target')
        k_text = match.group('k')
        if upper == 'ROT':
            if k_text is None or int(k_text) < 1:
                raise GateSpecParseException(f'rot needs a positive exponent, e.g. rot(3), at position {position}',
                                             position=position)
            k = int(k_text)
        elif upper in _ROTATIONS and k_text is None:
            k = _ROTATIONS[upper]
        elif upper in _CONTROLLED and k_text is None:
            k = 1
        else:
            raise GateSpecParseException(f'Unknown gate {part.split("@")[0]!r} at position {position}',
                                         position=position)

        if target.lower() == 'all':
            if upper in _CONTROLLED:
                raise GateSpecParseException(f'{upper} can not target all at position {position}',
                                             position=position)
            if n is None:
                raise GateSpecParseException(f'The qubit count is needed to expand @all at position {position}',
                                             position=position)
            gates.extend(GateSpec('rot', k, (q,)) for q in range(n))
            continue
        if not _INDEX_LIST.match(target):
            raise GateSpecParseException(f'Bad target {target!r} at position {position}', position=position)
        qubits = tuple(int(q) for q in target.split(','))
        expected = _CONTROLLED.get(upper, 1)
        if len(qubits) != expected or len(set(qubits)) != len(qubits):
            raise GateSpecParseException(f'{upper} needs {expected} distinct qubits at position {position}',
                                         position=position)
        if n is not None and max(qubits) >= n:
            raise GateSpecParseException(f'Target {max(qubits)} is outside [0, {n}) at position {position}',
                                         position=position)
        gates.append(GateSpec('rot' if upper not in _CONTROLLED else upper, k, qubits))
    if not gates:
        raise GateSpecParseException('Gate text is empty', position=0)
    return gates


def gate_qubit_count(gates: Sequence[GateSpec]) -> int:
    return 1 + max(max(gate.qubits) for gate in gates)


def gates_polynomial(gates: Sequence[GateSpec], n: int) -> PhasePolynomial:
    """
    the phase polynomial of the product of the (diagonal) gates
    """
    total = PhasePolynomial.constant(n, 1)
    for gate in gates:
        if gate.is_single_qubit:
            total = total + rotation(n, gate.qubits[0], gate.k)
        else:
            total = total + controlled_z(n, gate.qubits)
    return total


def per_qubit_polynomials(gates: Sequence[GateSpec], n: int) -> List[PhasePolynomial]:
    """
    one single-variable polynomial per qubit, for transversal products of single-qubit gates
    """
    per_qubit = [PhasePolynomial.constant(1, 1) for _ in range(n)]
    for index, gate in enumerate(gates):
        if not gate.is_single_qubit:
            raise GateSpecParseException(f'Gate {index} ({gate.name}) is not a single-qubit gate', position=0)
        qubit = gate.qubits[0]
        per_qubit[qubit] = per_qubit[qubit] + rotation(1, 0, gate.k)
    return per_qubit


def parse_p_grid(text: str) -> List[float]:
    """
    parses 'a:b:step' into the rates a, a + step, ... up to b (inclusive)
    """
    parts = text.split(':')
    if len(parts) != 3:
        raise ValueError(f'expected a:b:step, got {text!r}')
    start, stop, step = (float(part) for part in parts)
    if step <= 0 or stop < start:
        raise ValueError(f'bad grid {text!r}')
    count = int(np.floor((stop - start) / step + 1e-9)) + 1
    return [round(start + i * step, 10) for i in range(count)]


def resolve_code(text: str) -> SubsystemCode:
    """
    a code from a file path, or from a name: steane, rm15, toric:L, bacon-shor:L, haah:L, reed-muller:m
    """
    if os.path.exists(text):
        return load_code(text)
    family, _, param = text.partition(':')
    if param and not param.isdigit():
        raise ValueError(f'bad code parameter in {text!r}')
    return build_code(family, int(param) if param else 0)
