from .phase_polynomial import (PhasePolynomial, rotation, z_gate, s_gate, t_gate, controlled_z)
from .levels import CliffordLevel, LevelExceedsCapException, pauli_level, diagonal_level, DEFAULT_LEVEL_CAP
from .logical_action import (transversal_diagonal_logical_action, LogicalActionResult, CosetViolation,
                             CosetEnumerationTooLargeException, logical_x_representatives)
from .partition_bound import (level_bound_from_partition, LevelBoundReport, RegionFailure,
                              NonCoveringPartitionException, check_covering, search_tube_cover, TubeCoverReport,
                              TubeSearchTooLargeException, MAX_TUBE_SEARCH_LINES)
from .dense import (dense_verify, DenseCandidate, DenseVerificationReport, DenseVerificationTooLargeException,
                    DenseCodeModel, pauli_matrix, diagonal_matrix)
from .equivalence import (hierarchy_definition_equivalence, EquivalenceReport, conjugation_level, is_phase_pauli,
                          ConjugationLevelSolver)
