"""Schubert-cell incidence structures for Chevalley groups over finite
fields: parabolic factorizations and the closed-form thickness q^l(z),
brute-force verification in GL_n(F_q), the thin-cell census, and the
supporting finite-geometry layer (subspace lattices, projective incidence
axioms, ovoids)."""

from .cells import (
    CellPoint,
    SchubertIncidence,
    TheoremReport,
    build_incidence,
    enumerate_cell,
    fiber_parameterization,
    fiber_points,
    incidence_ratio_test,
    thickness_formula,
    thin_census,
    verify_theorem,
)
from .chevalley import (
    FlagCanonical,
    MatrixGF,
    SubspaceCanonical,
    coset_key_borel,
    coset_key_parabolic,
    h_torus,
    is_in_borel,
    is_in_parabolic,
    n_simple,
    n_simple_inv,
    x_root,
)
from .gf import FieldElement, FieldSpec, enumerate_field, factor_prime_power, field_make
from .incidence import (
    IncidenceStructure,
    OvoidReport,
    ProjectiveAxiomsReport,
    SubspaceLattice,
    TableLattice,
    check_atomic,
    check_grassmann,
    check_modular,
    check_ovoid,
    check_projective_axioms,
    check_ranked,
    gaussian_binomial,
    join,
    lattice_make,
    meet,
    ovoid_search,
    parse_point_set,
    render_point_set,
    tangent_lines,
)
from .parabolic import (
    ParabolicFactorization,
    ParabolicIndexSet,
    enumerate_parabolic,
    factorize_uzv,
    min_coset_rep,
    parabolic,
    positive_roots_of,
    quotient_reps,
)
from .rootsys import (
    RootSystem,
    WeylElement,
    canonical_reduced_word,
    inversion_set,
    parse_word,
    render_word,
    rootsystem_make,
    weyl_enumerate,
    weyl_identity,
    weyl_inverse,
    weyl_length,
    weyl_mul,
    weyl_order,
    weyl_simple,
    word_to_element,
)

__version__ = "0.1.0"
