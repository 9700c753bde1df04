"""Exact computations in free associative algebras and generic matrices."""

__version__ = "0.1.0"

from .errors import DomainError, NcalgError, PreconditionError, StructuralError
from .fields import GF, MERSENNE31, QQ, parse_field
from .freealg import FreePoly, commutator, homogeneous_part, nc_mul, standard_polynomial, substitute
from .words import (Cmp, OmegaClass, RzClass, bergman_projection, bergman_quotient, in_Rz,
                    inf_cmp, primitive_root)
from .unipoly import UniPoly, irreducible_fq
from .commpoly import CommPoly, cp_eval, cp_mul
from .genmat import (ConcreteMatrix, GenericMatrix, charpoly, generic_generators, minpoly, pi_map,
                     pi_test, specialize, spectral_probe, ut_eval, word_trace)
from .centralizer import (centralizer, centralizer_auto, centralizer_basis, integral_closure_probe,
                          is_in_centralizer, nc_root, recognize_generator)
from .expr import ParseError, lower, parse_expr, parse_poly
