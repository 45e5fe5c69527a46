from gatebound.pauli import PauliOperator, SymplecticBasis

from .codes import LatticeGeometry, Region, SubsystemCode, build_code, load_code, save_code
from .cleaning import BARE, DRESSED, clean_operator, is_cleanable, region_counts
from .logical_search import distance
from .hierarchy import PhasePolynomial, diagonal_level, level_bound_from_partition
from .loss import loss_curve, threshold_estimate
