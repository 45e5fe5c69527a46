from .pauli_operator import (PauliOperator, PauliFormatException, QubitCountMismatchException,
                             multiply, inverse, commutes)
from .symplectic_basis import (SymplecticBasis, SpanMembership, row_reduce, in_span, centralizer, center,
                               commuting_with_all, symplectic_gram)
