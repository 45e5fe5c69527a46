import logging
from dataclasses import dataclass, field
from typing import Iterable, List, Sequence, Tuple

import numpy as np

from gatebound.codes import LatticeGeometry
from gatebound.geometry.neighborhoods import neighborhood
from gatebound.utils import KwargsException

_logger = logging.getLogger(__name__)


class InvalidCircuitException(KwargsException):
    """
    raised for gates that overlap within a layer or act outside the qubit range
    """
    pass


class LocalCircuit:
    """
    a constant depth circuit, described by the supports of its gates layer by layer
    """

    def __init__(self, layers: Iterable[Iterable[Iterable[int]]], n: int):
        """
        :param layers: for each layer, the qubit sets its gates act on
        :param n: the number of qubits
        """
        self._n = n
        self._layers: Tuple[Tuple[frozenset, ...], ...] = tuple(tuple(frozenset(int(q) for q in gate)
                                                                      for gate in layer)
                                                                for layer in layers)
        for depth, layer in enumerate(self._layers):
            used: set = set()
            for gate in layer:
                if not gate:
                    raise InvalidCircuitException(f'Empty gate in layer {depth}', layer=depth)
                if min(gate) < 0 or max(gate) >= n:
                    raise InvalidCircuitException(f'Gate {sorted(gate)} in layer {depth} is outside [0, {n})',
                                                  layer=depth)
                if not used.isdisjoint(gate):
                    raise InvalidCircuitException(f'Gates overlap in layer {depth}', layer=depth,
                                                  qubits=sorted(used & gate))
                used.update(gate)

    @property
    def n(self) -> int:
        return self._n

    @property
    def layers(self) -> Tuple[Tuple[frozenset, ...], ...]:
        return self._layers

    @property
    def depth(self) -> int:
        return len(self._layers)

    def to_dict(self) -> dict:
        return {'n': self._n, 'layers': [[sorted(gate) for gate in layer] for layer in self._layers]}


def _gate_reach(geometry: LatticeGeometry, gate: frozenset) -> int:
    # two qubits on one site still need radius 1 to reach each other
    if len(gate) < 2:
        return 0
    return max(geometry.diameter(gate), 1)


def circuit_spread(geometry: LatticeGeometry, circuit: LocalCircuit) -> int:
    """
    the light cone bound s_U: the sum over layers of the largest gate diameter in the layer.

    supp(U A U^dagger) is contained in B(supp(A), s_U) for every operator A.
    """
    return sum(max((_gate_reach(geometry, gate) for gate in layer), default=0) for layer in circuit.layers)


# symplectic action on the local vector (x_a, x_b, z_a, z_b)
def _elementary_gates() -> List[np.ndarray]:
    gates = []
    for qubit in (0, 1):
        hadamard = np.eye(4, dtype=np.uint8)
        hadamard[[qubit, qubit + 2]] = hadamard[[qubit + 2, qubit]]
        gates.append(hadamard)
        phase = np.eye(4, dtype=np.uint8)
        phase[qubit + 2, qubit] = 1
        gates.append(phase)
    for control, target in ((0, 1), (1, 0)):
        cnot = np.eye(4, dtype=np.uint8)
        cnot[target, control] = 1
        cnot[control + 2, target + 2] = 1
        gates.append(cnot)
    return gates


_ELEMENTARY_GATES = _elementary_gates()


def random_symplectic_gate(rng: np.random.Generator, qubits: int, length: int = 8) -> np.ndarray:
    """
    a random Clifford on one or two qubits, as a symplectic matrix on (x.., z..)
    """
    matrix = np.eye(4, dtype=np.uint8)
    candidates = _ELEMENTARY_GATES if qubits == 2 else [_ELEMENTARY_GATES[0], _ELEMENTARY_GATES[1]]
    for choice in rng.integers(0, len(candidates), size=length):
        matrix = (candidates[int(choice)] @ matrix) % 2
    if qubits == 1:
        return matrix[np.ix_([0, 2], [0, 2])]
    return matrix


def _random_layer(geometry: LatticeGeometry, rng: np.random.Generator) -> List[Tuple[int, ...]]:
    n = geometry.qubit_count
    used = np.zeros(n, dtype=bool)
    gates: List[Tuple[int, ...]] = []
    for qubit in rng.permutation(n):
        qubit = int(qubit)
        if used[qubit]:
            continue
        if rng.random() < 0.5:
            near = geometry.axis_offsets(geometry.coords, geometry.coords[qubit]).max(axis=1) <= 1
            partners = np.flatnonzero(near & ~used)
            partners = partners[partners != qubit]
            if partners.size:
                partner = int(rng.choice(partners))
                used[[qubit, partner]] = True
                gates.append((qubit, partner))
                continue
        if rng.random() < 0.5:
            used[qubit] = True
            gates.append((qubit,))
    return gates


def _propagate(x: np.ndarray, z: np.ndarray, gates: Sequence[Tuple[Tuple[int, ...], np.ndarray]]) -> None:
    for support, matrix in gates:
        qubits = list(support)
        local = np.concatenate([x[qubits], z[qubits]])
        image = (matrix @ local) % 2
        x[qubits] = image[:len(qubits)]
        z[qubits] = image[len(qubits):]


@dataclass
class SpreadSoundnessReport:
    samples: int = 0
    largest_bound: int = 0
    violations: List[dict] = field(default_factory=list)

    @property
    def sound(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {'samples': self.samples, 'largest_bound': self.largest_bound, 'sound': self.sound,
                'violations': self.violations}


def check_spread_soundness(geometry: LatticeGeometry,
                           samples: int,
                           rng: np.random.Generator,
                           max_depth: int = 3) -> SpreadSoundnessReport:
    """
    propagates random Paulis through random local Clifford circuits, and checks that the support of
    the conjugated operator stays inside B(supp(A), s_U)

    :param geometry: the lattice
    :param samples: the number of random circuits
    :param rng: the random generator
    :param max_depth: circuits have depth 1..max_depth
    """
    n = geometry.qubit_count
    report = SpreadSoundnessReport()
    for _ in range(samples):
        depth = int(rng.integers(1, max_depth + 1))
        layers = [_random_layer(geometry, rng) for _ in range(depth)]
        circuit = LocalCircuit(layers, n)
        bound = circuit_spread(geometry, circuit)

        weight = int(rng.integers(1, min(3, n) + 1))
        support = rng.choice(n, size=weight, replace=False)
        x = np.zeros(n, dtype=np.uint8)
        z = np.zeros(n, dtype=np.uint8)
        letters = rng.integers(1, 4, size=weight)
        x[support] = letters & 1
        z[support] = letters >> 1
        for layer in layers:
            _propagate(x, z, [(gate, random_symplectic_gate(rng, len(gate))) for gate in layer])

        image = set(np.flatnonzero(x | z).tolist())
        allowed = neighborhood(geometry, support.tolist(), bound)
        report.samples += 1
        report.largest_bound = max(report.largest_bound, bound)
        if not image <= allowed.qubits:
            _logger.warning(f'Conjugated support escapes the light cone of radius {bound}')
            report.violations.append({'support': sorted(int(q) for q in support), 'bound': bound,
                                      'escaped': sorted(image - allowed.qubits)})
    return report
