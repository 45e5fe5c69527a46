from .neighborhoods import neighborhood, ball, dilate_points, site_grid, qubits_on_sites
from .circuits import (LocalCircuit, circuit_spread, check_spread_soundness, SpreadSoundnessReport,
                       InvalidCircuitException, random_symplectic_gate)
from .partitions import (Partition, fattened_tiling, tube_partition, skewed_tiling_from_balls, component_count,
                         InvalidPartitionParametersException)
from .random_cells import random_cell_region, CellRegionResult, cell_side
