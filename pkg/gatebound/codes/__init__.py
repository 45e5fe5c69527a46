from .lattice_geometry import LatticeGeometry, InvalidGeometryException
from .region import Region, InvalidRegionException
from .subsystem_code import (SubsystemCode, derive_structure, InconsistentStabilizerException,
                             GeometryRequiredException, NotCSSCodeException, anticommutation_matrix)
from .families import (build_toric, build_reed_muller, build_bacon_shor, build_haah_cubic, build_code,
                        family_names, toric_edge, haah_qubit, InvalidCodeParametersException)
from .code_serializer import (CodeSerializerBase, TextCodeSerializer, DefaultCodeSerializer, CodeFormatException,
                              save_code, load_code)
