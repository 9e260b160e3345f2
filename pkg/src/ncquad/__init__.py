"""Exact computer algebra for finitely presented quadratic algebras.

Degree-truncated noncommutative Groebner bases, Hilbert series, quadratic
duals and finite-degree Koszulity certificates, plus the full isomorphism
classification of three-generator Sklyanin algebras.
"""

from .errors import (
    AlgebraError,
    CharThreeError,
    DegenerateDenominatorError,
    DimensionMismatchError,
    HomogeneityError,
    IncompleteBasisError,
    MixedFieldsError,
    NoCubeRootError,
    ParseError,
    PreconditionViolatedError,
    UnknownGeneratorError,
)
from .groebner import (
    GroebnerBasis,
    Presentation,
    complete,
    graded_dim_oracle,
    hilbert_coeffs,
    normal_form,
    normal_words,
    normal_words_by_degree,
)
from .ncpoly import (
    LinearSub,
    MonomialOrder,
    NcPoly,
    apply_sub,
    compare_words,
    cyclic_derivative,
    cyclic_shift,
    cyclize,
    degree_lex,
    is_cyclically_invariant,
    parse_poly,
    render_poly,
    render_word,
)
from .potential import (
    Potential,
    relations_from_potential,
    sklyanin_potential,
    staircase_potential,
    sum_cube_potential,
)
from .quadratic import (
    DualHypotheses,
    QuadraticAlgebra,
    dual_hypotheses,
    dual_algebra,
    koszul_defect,
    right_annihilator_dim,
)
from .scalars import (
    GF,
    QQ,
    QQ_THETA,
    Field,
    PrimeField,
    RationalField,
    ThetaField,
    ThetaRational,
    parse_field,
    primitive_cube_root,
)
from .sklyanin import (
    ChainResult,
    GroupInvariants,
    IsoDecision,
    ParamTriple,
    RecursionOutcome,
    RecursionState,
    SklyaninClass,
    SklyaninKind,
    are_isomorphic,
    classify,
    expected_normal_words,
    group_invariants,
    in_m_set,
    iso_group_orbit,
    one_dimensional_representations,
    coefficient_recursion,
    root1_sub,
    root2_sub,
    sklyanin_presentation,
    staircase_presentation,
    staircase_relations,
    substitution_chain,
)

__all__ = [
    # errors
    "AlgebraError",
    "CharThreeError",
    "DegenerateDenominatorError",
    "DimensionMismatchError",
    "HomogeneityError",
    "IncompleteBasisError",
    "MixedFieldsError",
    "NoCubeRootError",
    "ParseError",
    "PreconditionViolatedError",
    "UnknownGeneratorError",
    # scalars
    "GF",
    "QQ",
    "QQ_THETA",
    "Field",
    "PrimeField",
    "RationalField",
    "ThetaField",
    "ThetaRational",
    "parse_field",
    "primitive_cube_root",
    # free algebra
    "LinearSub",
    "MonomialOrder",
    "NcPoly",
    "apply_sub",
    "compare_words",
    "cyclic_derivative",
    "cyclic_shift",
    "cyclize",
    "degree_lex",
    "is_cyclically_invariant",
    "parse_poly",
    "render_poly",
    "render_word",
    # groebner
    "GroebnerBasis",
    "Presentation",
    "complete",
    "graded_dim_oracle",
    "hilbert_coeffs",
    "normal_form",
    "normal_words",
    "normal_words_by_degree",
    # quadratic
    "DualHypotheses",
    "QuadraticAlgebra",
    "dual_hypotheses",
    "dual_algebra",
    "koszul_defect",
    "right_annihilator_dim",
    # potentials
    "Potential",
    "relations_from_potential",
    "sklyanin_potential",
    "staircase_potential",
    "sum_cube_potential",
    # sklyanin layer
    "ChainResult",
    "GroupInvariants",
    "IsoDecision",
    "ParamTriple",
    "RecursionOutcome",
    "RecursionState",
    "SklyaninClass",
    "SklyaninKind",
    "are_isomorphic",
    "classify",
    "expected_normal_words",
    "group_invariants",
    "in_m_set",
    "iso_group_orbit",
    "one_dimensional_representations",
    "coefficient_recursion",
    "root1_sub",
    "root2_sub",
    "sklyanin_presentation",
    "staircase_presentation",
    "staircase_relations",
    "substitution_chain",
]
