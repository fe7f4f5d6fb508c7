"""Exact invariants of orbifold Landau-Ginzburg models (f, G) built from
invertible polynomials in three variables, and mechanical verification of
the mirror identities relating them to cusp singularities with group action.

All arithmetic is exact (integers and fractions); no floating point.
"""

from .errors import *  # noqa: F401,F403
from .ip_core import (  # noqa: F401
    AtomicPart,
    InvertiblePolynomial,
    TypeTag3,
    WeightSystem,
    canonical_weights,
    cf,
    classify3,
    decompose_atoms,
    det,
    format_polynomial,
    parse_polynomial,
    reduced_weights,
    transpose,
    validate_invertible,
)
from .symmetry import (  # noqa: F401
    AgeReport,
    DiagonalGroup,
    PhaseVector,
    age_and_fix,
    contains_g0,
    dual_group,
    format_group,
    g0,
    g0_group,
    gfin,
    group_from_generators,
    in_sl,
    is_sl_subgroup,
    junior_count,
    parse_group_spec,
    phase_vector,
    subgroup_fixing_coordinate,
    subgroups_containing_g0,
    trivial_group,
)
from .curve_side import (  # noqa: F401
    CurveInvariants,
    DolgachevData,
    count_m,
    curve_invariants,
    dolgachev,
    dolgachev_gfin,
    genus,
    genus_bp_oracle,
    orbit_invariants,
    stringy_euler,
)
from .cusp_side import (  # noqa: F401
    CuspPolynomial,
    GabrielovData,
    cusp_char_poly,
    cusp_milnor,
    delta,
    gabrielov,
    gabrielov_prime,
)
from .spectra import (  # noqa: F401
    CycloVector,
    ExponentList,
    LefschetzTable,
    PoincareVerdict,
    char_poly_qh,
    cyclo_degree,
    cyclo_div,
    cyclo_eq,
    cyclo_expand,
    cyclo_mul,
    equivariant_char_poly,
    lefschetz_numbers,
    poincare_series,
    psi,
    psi_closed_form,
    verify_poincare_theorem,
)
from .harness import (  # noqa: F401
    CatalogEntry,
    MirrorReport,
    VerificationSummary,
    analyze,
    builtin_catalog,
    emit_report,
    enumerate_corpus,
    enumerate_polynomials,
    run_verification,
    verify_mirror,
)

__version__ = "0.1.0"
