from typing import Dict, FrozenSet, Iterable, Mapping, Sequence, Tuple

import numpy as np

Monomial = FrozenSet[int]
CanonicalKey = Tuple[int, int, Tuple[Tuple[Tuple[int, ...], int], ...]]


class PhasePolynomial:
    """
    a function f: {0,1}^n -> Z / 2^kappa, written as a sum of monomials c * x_M.
    it describes the diagonal gate ``|x> -> exp(2 pi i f(x) / 2^kappa) |x>``.

    coefficients are kept reduced mod 2^kappa, and zero coefficients are dropped.
    """

    __slots__ = ('_n', '_kappa', '_terms')

    def __init__(self, n: int, kappa: int, terms: Mapping[Iterable[int], int] = ()):  # type: ignore
        if kappa < 1:
            raise ValueError(f'kappa must be at least 1, got {kappa}')
        modulus = 1 << kappa
        reduced: Dict[Monomial, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for monomial, coefficient in items:
            key = frozenset(int(j) for j in monomial)
            if any(j < 0 or j >= n for j in key):
                raise ValueError(f'monomial {sorted(key)} uses a variable outside [0, {n})')
            reduced[key] = (reduced.get(key, 0) + int(coefficient)) % modulus
        self._n = n
        self._kappa = kappa
        self._terms: Dict[Monomial, int] = {key: value for key, value in reduced.items() if value}

    @classmethod
    def constant(cls, n: int, kappa: int, value: int = 0) -> 'PhasePolynomial':
        return cls(n, kappa, {frozenset(): value})

    @classmethod
    def from_truth_table(cls, values: Sequence[int], n: int, kappa: int) -> 'PhasePolynomial':
        """
        interpolates a multilinear polynomial from its values (index bit j is x_j)
        """
        if len(values) != 1 << n:
            raise ValueError(f'expected {1 << n} values, got {len(values)}')
        coefficients = np.array(values, dtype=np.int64)
        for j in range(n):
            bit = 1 << j
            for index in range(1 << n):
                if index & bit:
                    coefficients[index] -= coefficients[index ^ bit]
        terms = {frozenset(j for j in range(n) if index >> j & 1): int(c)
                 for index, c in enumerate(coefficients) if c}
        return cls(n, kappa, terms)

    @property
    def n(self) -> int:
        return self._n

    @property
    def kappa(self) -> int:
        return self._kappa

    @property
    def modulus(self) -> int:
        return 1 << self._kappa

    @property
    def terms(self) -> Dict[Monomial, int]:
        return dict(self._terms)

    @property
    def degree(self) -> int:
        return max((len(m) for m in self._terms), default=0)

    def is_constant(self) -> bool:
        return all(not monomial for monomial in self._terms)

    def evaluate(self, bits: Sequence[int]) -> int:
        total = 0
        for monomial, coefficient in self._terms.items():
            if all(bits[j] for j in monomial):
                total += coefficient
        return total % self.modulus

    def truth_table(self) -> np.ndarray:
        """
        f on all 2^n inputs, index bit j is x_j
        """
        indices = np.arange(1 << self._n)
        values = np.zeros(1 << self._n, dtype=np.int64)
        for monomial, coefficient in self._terms.items():
            mask = sum(1 << j for j in monomial)
            values += np.where((indices & mask) == mask, coefficient, 0)
        return values % self.modulus

    def scale_to(self, kappa: int) -> 'PhasePolynomial':
        """
        the same gate written modulo 2^kappa (kappa must not shrink)
        """
        if kappa < self._kappa:
            raise ValueError(f'can not embed a mod 2^{self._kappa} polynomial into mod 2^{kappa}')
        factor = 1 << (kappa - self._kappa)
        return PhasePolynomial(self._n, kappa, {m: c * factor for m, c in self._terms.items()})

    def add(self, other: 'PhasePolynomial') -> 'PhasePolynomial':
        """
        the product of the two diagonal gates
        """
        if other.n != self._n:
            raise ValueError(f'can not add polynomials on {self._n} and {other.n} variables')
        kappa = max(self._kappa, other.kappa)
        left, right = self.scale_to(kappa), other.scale_to(kappa)
        terms = dict(left._terms)
        for monomial, coefficient in right._terms.items():
            terms[monomial] = terms.get(monomial, 0) + coefficient
        return PhasePolynomial(self._n, kappa, terms)

    def embedded(self, n: int, variables: Sequence[int]) -> 'PhasePolynomial':
        """
        relabels variable i as variables[i] in an n-variable polynomial
        """
        return PhasePolynomial(n, self._kappa,
                               {frozenset(variables[j] for j in m): c for m, c in self._terms.items()})

    def finite_difference(self, j: int) -> 'PhasePolynomial':
        """
        f(x + e_j) - f(x): every monomial c * x_M with j in M turns into c * x_{M-j} - 2c * x_M
        """
        terms: Dict[Monomial, int] = {}
        for monomial, coefficient in self._terms.items():
            if j in monomial:
                lower = monomial - {j}
                terms[lower] = terms.get(lower, 0) + coefficient
                terms[monomial] = terms.get(monomial, 0) - 2 * coefficient
        return PhasePolynomial(self._n, self._kappa, terms)

    def canonical_key(self) -> CanonicalKey:
        return (self._n, self._kappa,
                tuple(sorted((tuple(sorted(m)), c) for m, c in self._terms.items())))

    def __add__(self, other: 'PhasePolynomial') -> 'PhasePolynomial':
        return self.add(other)

    def __eq__(self, other):
        if not isinstance(other, PhasePolynomial):
            return NotImplemented
        return self.canonical_key() == other.canonical_key()

    def __hash__(self):
        return hash(self.canonical_key())

    def __repr__(self):
        if not self._terms:
            return f'PhasePolynomial(0 mod 2^{self._kappa})'
        parts = []
        for monomial, coefficient in sorted(self._terms.items(), key=lambda item: (len(item[0]), sorted(item[0]))):
            variables = '*'.join(f'x{j}' for j in sorted(monomial))
            parts.append(f'{coefficient}*{variables}' if variables else str(coefficient))
        return f'PhasePolynomial({" + ".join(parts)} mod 2^{self._kappa})'

    def to_dict(self) -> dict:
        return {'n': self._n, 'kappa': self._kappa,
                'terms': [[sorted(m), c] for m, c in sorted(self._terms.items(), key=lambda t: sorted(t[0]))]}


def rotation(n: int, qubit: int, k: int, kappa: int = 0) -> PhasePolynomial:
    """
    diag(1, exp(2 pi i / 2^k)) on one qubit: Z is k=1, S is k=2, T is k=3
    """
    kappa = kappa or k
    if kappa < k:
        raise ValueError(f'rotation by 2 pi / 2^{k} needs kappa >= {k}')
    return PhasePolynomial(n, kappa, {frozenset([qubit]): 1 << (kappa - k)})


def z_gate(n: int, qubit: int, kappa: int = 1) -> PhasePolynomial:
    return rotation(n, qubit, 1, kappa)


def s_gate(n: int, qubit: int, kappa: int = 2) -> PhasePolynomial:
    return rotation(n, qubit, 2, kappa)


def t_gate(n: int, qubit: int, kappa: int = 3) -> PhasePolynomial:
    return rotation(n, qubit, 3, kappa)


def controlled_z(n: int, qubits: Sequence[int], kappa: int = 1) -> PhasePolynomial:
    """
    the multi-controlled Z on the given qubits (CZ for two, CCZ for three)
    """
    if len(set(qubits)) != len(qubits):
        raise ValueError(f'controlled Z needs distinct qubits, got {list(qubits)}')
    return PhasePolynomial(n, kappa, {frozenset(qubits): 1 << (kappa - 1)})
