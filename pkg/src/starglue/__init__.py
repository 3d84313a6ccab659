"""starglue: numerical semigroups, toric ideals of monomial curves, and
ACM/Gorenstein tests for projective closures under gluing."""

__version__ = "0.1.0"

from .criteria import (
    CurveVerdict,
    HilbertSeries,
    closure_hilbert_series,
    full_verdict,
    hilbert_series,
    is_acm_apery,
    is_acm_groebner,
    is_gorenstein_apery,
    is_gorenstein_hilbert,
)
from .family import FamilyReport, random_star_family
from .poly import (
    GroebnerBasis,
    MonomialOrder,
    Polynomial,
    VariableSet,
    buchberger,
    dehomogenize,
    divmod_poly,
    format_polynomial,
    homogenize,
    homogenize_basis,
    normal_form,
    parse_polynomial,
    s_polynomial,
    variables,
)
from .semigroup import (
    AperySet,
    GlueResult,
    GluingSpec,
    NumericalSemigroup,
    ProjectiveAperySet,
    ProjectiveSemigroup,
    apery,
    contains,
    contains2d,
    format_generators,
    frobenius,
    genus,
    glue,
    gluing_spec,
    is_good_apery,
    is_symmetric,
    make_semigroup,
    parse_generators,
    projective_apery,
    projectivize,
    star_glue,
)
from .toric import (
    MonomialCurveIdeal,
    ProjectiveCurveIdeal,
    complete_glued_ideal,
    defining_ideal,
    glued_ideal,
    projective_closure_by_elimination,
    projective_closure_ideal,
    sort_curve_ideal,
    star_basis_check,
    vanishes_under_weights,
)

__all__ = [name for name in dir() if not name.startswith("_")]
