import numpy as np
import pytest

from gatebound.codes import build_bacon_shor, build_reed_muller, build_toric
from gatebound.hierarchy import (DenseCandidate, DenseCodeModel, DenseVerificationTooLargeException, PhasePolynomial,
                                 dense_verify, diagonal_matrix, pauli_matrix, s_gate)
from gatebound.hierarchy.dense import DensePauli
from gatebound.pauli import PauliOperator


def _candidates():
    return [DenseCandidate('x-column', 'bare', PauliOperator.parse('XIIXIIXII')),
            DenseCandidate('z-row', 'bare', PauliOperator.parse('ZZZIIIIII')),
            DenseCandidate('x-diagonal', 'dressed', PauliOperator.parse('XIIIXIIIX')),
            DenseCandidate('gauge', 'dressed', PauliOperator.parse('XXIIIIIII')),
            DenseCandidate('single-x', 'dressed', PauliOperator.parse('XIIIIIIII'))]


def test_bacon_shor_candidates():
    report = dense_verify(build_bacon_shor(3), _candidates(), samples=10, rng=np.random.default_rng(4))

    column = report.verdict('x-column')
    assert column.bare_logical and column.dressed_logical and column.passes

    diagonal = report.verdict('x-diagonal')
    assert diagonal.preserves_codespace
    assert diagonal.dressed_logical
    assert not diagonal.bare_logical

    gauge = report.verdict('gauge')
    assert gauge.dressed_logical
    assert not gauge.bare_logical

    single = report.verdict('single-x')
    assert not single.preserves_codespace
    assert not single.passes

    assert report.closure_checked == 10
    assert report.consistent


def test_projector_rank_matches_the_code():
    model = DenseCodeModel(build_bacon_shor(3))
    code = model.code
    assert round(np.trace(model.projector).real) == 2 ** (code.n - code.stabilizer_rank)


def test_twirl_is_idempotent():
    model = DenseCodeModel(build_bacon_shor(2))
    rng = np.random.default_rng(7)
    state = model.random_codespace_state(rng)
    rho = np.outer(state, state.conj())
    once = model.twirl(rho)
    assert np.allclose(model.twirl(once), once)


def test_diagonal_gates_on_steane():
    code = build_reed_muller(3)
    transversal_s = PhasePolynomial(code.n, 2, {(j,): 1 for j in range(code.n)})
    candidates = [DenseCandidate('s-all', 'bare', transversal_s),
                  DenseCandidate('s-all-matrix', 'bare', _transversal_s(code.n))]
    report = dense_verify(code, candidates, samples=0, rng=np.random.default_rng(1))
    assert report.verdict('s-all').bare_logical
    assert report.verdict('s-all-matrix').bare_logical


def _transversal_s(n):
    matrix = np.array([[1.0]], dtype=complex)
    for _ in range(n):
        matrix = np.kron(matrix, diagonal_matrix(s_gate(1, 0)))
    return matrix


def test_pauli_matrices():
    assert np.allclose(pauli_matrix(PauliOperator.parse('Y')), [[0, -1j], [1j, 0]])
    xz = pauli_matrix(PauliOperator.parse('XZ'))
    # qubit 0 is the least significant bit of the basis index
    assert np.allclose(xz, np.kron([[1, 0], [0, -1]], [[0, 1], [1, 0]]))


def test_dense_pauli_actions_match_the_matrix():
    operator = PauliOperator.parse('-iYXZ')
    dense = DensePauli(operator)
    matrix = pauli_matrix(operator)
    rng = np.random.default_rng(0)
    other = rng.normal(size=(8, 8)) + 1j * rng.normal(size=(8, 8))
    assert np.allclose(dense.left(other), matrix @ other)
    assert np.allclose(dense.right(other), other @ matrix)
    assert np.allclose(dense.conjugate(other), matrix @ other @ matrix.conj().T)


def test_too_many_qubits():
    with pytest.raises(DenseVerificationTooLargeException):
        DenseCodeModel(build_toric(3))
