"""Exact combinatorics of equivariant bundles on Lagrangian Grassmannians:
balanced diagrams, Lagrangian Borel-Bott-Weil, Ext groups between
irreducible bundles, K-classes of the bundles E^lam / F^lam, resolutions
of Sigma^lam U^*, and mutations of semiorthonormal bases."""

from .bbw import BBWResult, bbw_weight, cohomology, vanishing_check
from .diagrams import (
    DiagramPoset,
    FrobeniusCoordinates,
    YoungDiagram,
    balanced_criterion_check,
    contains,
    covers,
    diagrams_in_box,
    enumerate_balanced,
    enumerate_poset,
    frobenius,
    from_frobenius,
    is_balanced,
    transpose,
)
from .ext import ExtTable, block_check, block_weights, equivariant_ext, ext_schur_pair, hom_dimension
from .ktheory import (
    KClass,
    equivariant_euler_pairing,
    euler_pairing,
    kclass_E,
    kclass_F,
    rank,
    verify_ext_equals_hom,
    verify_graded_dual,
)
from .mutations import (
    BilinearLattice,
    decompose,
    left_dual_basis,
    left_mutation,
    right_mutation,
)
from .resolutions import (
    Resolution,
    ResolutionTerm,
    build_resolution,
    e1_page,
    ext_schur_vs_dualF,
    verify_k_exactness,
)
from .schur import (
    GLWeight,
    SpWeight,
    decompose_mixed_tensor,
    gl_dimension,
    lambda_of_sym2_decomposition,
    lr_coefficient,
    skew_decompose,
    sp_dimension,
)

__version__ = "0.1.0"
