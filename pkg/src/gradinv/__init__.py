"""Exact-arithmetic toolkit for homogeneous involutions on graded matrix algebras.

Twisted group algebras over finite abelian supports, the classification of
homogeneous involutions for the Pauli grading, canonical forms of the support
involutions under SL_2(Z_n)-conjugation, and the construction of involutions
psi = Phi^-1 psi0(X^t) Phi on matrix algebras over a graded-division algebra.
"""

from .abgroup import (
    Character,
    FinAbGroup,
    GroupMap,
    SymplecticShape,
    characters,
    crt_reassemble,
    enumerate_automorphisms,
    is_automorphism,
    parse_group,
    split_by_primes,
)
from .classify import ClassificationReport, classify_pauli, expected_classification
from .cocycle import (
    Bicharacter,
    StandardCocycle,
    TableCocycle,
    bicharacter_beta,
    coboundary,
    is_cocycle,
    is_nondegenerate,
    standard_sigma,
    twisted_product,
)
from .cyclotomic import CycNum, RootOfUnity, cyclotomic_poly, embed_root, totient
from .homog import (
    HomMapData,
    WitnessData,
    are_equivalent,
    are_isomorphic,
    check_homogeneous_map,
    check_involution,
    compute_P,
    exists_fixed_or_inverting,
    lambda_extend,
    restrict_hom_map,
    verify_equiv_witness,
    verify_iso_witness,
)
from .matinv import (
    Gamma,
    GradedMatrixAlgebra,
    InvolutionDatum,
    MatrixInvolution,
    build_Phi,
    build_grading,
    datum_violations,
    form_epsilon,
    psi_from_phi,
    trivial_algebra,
    trivial_psi0,
    validate_datum,
    verify_psi,
)
from .orbits import (
    canonical_forms,
    orbit_reduce,
    verify_conjugator_table,
    verify_odd_similarity,
    verify_pairwise_nonconjugate,
)
from .realize import (
    CycMatrix,
    MonomialMatrix,
    RealizedAlgebra,
    RealizedMap,
    involution_form,
    pauli_generators,
    realize_division_algebra,
    realize_hom_map,
    realized_is_involution,
    verify_map_properties,
)

__version__ = "0.1.0"
