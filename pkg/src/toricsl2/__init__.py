"""Exact toric geometry: cones, Hilbert bases, class groups, invariant
monomials, and a classifier for quasihomogeneous SL(2)-embeddings."""
from .exact import FgAbelianGroup, IntMatrix, cokernel, snf, solve_integer
from .cone import (
    HalfspaceCone, RayCone, contains, dualize, edges_from_facets, extremal_rays,
    is_strongly_convex,
)
from .semigroup import (
    DiophantineSystem, HilbertBasis, brute_force_basis, generates_up_to, hilbert_basis_of_cone,
    hilbert_basis_of_system, is_monoid_element,
)
from .toric import (
    AffineToricData, TDivisor, class_group, degree_map, divisor_class, linearly_equivalent,
    pd_points, principal_divisor,
)
from .quotient import WeightData, invariant_generators, is_invariant, monomial_weight
from .sl2 import (
    EmbeddingData, GExponent, VExponent, cl_group, cone_to_v, embedding_cone,
    embedding_toric_data, embedding_weights, height, is_toric, phi_star, toricity, v_to_cone,
    verify,
)

__version__ = "0.1.0"
