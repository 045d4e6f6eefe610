"""Exact-arithmetic workbench for finite-dimensional bialgebroids and Hopf algebroids.

All computation is over an exact field (rationals or a prime field); every
structural claim is decided by finite linear algebra and reported with
explicit counterexample certificates when it fails.
"""

from .exactfield import RationalField, PrimeField, GFElement, Matrix, Subspace, field_from_name
from .report import Check, Report
from .algebra import (
    HOM,
    ANTI,
    Algebra,
    AlgebraElement,
    AlgebraMap,
    flip_tensor,
    opposite,
    tensor_apply,
    verify_algebra,
    verify_map,
)
from .bimodtensor import BalancedTensorSpace, plain_tensor_space
from .bialgebroid import (
    LeftBialgebroid,
    RightBialgebroid,
    verify_left_bialgebroid,
    verify_right_bialgebroid,
    verify_left_morphism,
    verify_right_morphism,
)
from .dualspace import (
    LOWER_STAR,
    STAR_LOWER,
    UPPER_STAR,
    STAR_UPPER,
    DualBialgebroid,
    DualModule,
    act_lower_star,
    act_star_lower,
    act_upper_star,
    act_star_upper,
    dual_lower_star,
    dual_star_lower,
    dual_upper_star,
    dual_star_upper,
    transpose_left,
    transpose_right,
)
from .hopfcore import (
    GaloisMaps,
    HopfAlgebroid,
    antipode_uniqueness,
    check_lu_axioms,
    check_luiiv,
    reconstruct_left,
    reconstruct_right,
    verify_galois,
    verify_hopf,
    verify_sisom,
)
from .twistlab import (
    SeparabilityStructure,
    WeakHopfAlgebra,
    apply_twist,
    convolution_inverse,
    diagonal_separability,
    hopf_algebra_criterion,
    recover_twist,
    separability_from_weak,
    twisted_antipode,
    verify_separability,
    verify_twist,
    verify_weak_hopf,
    weak_bialgebra_from_sep,
    weak_hopf_to_hopf_algebroid,
    wha_decide,
)
from .integrallab import (
    LEFT,
    RIGHT,
    Degenerate,
    FrobeniusSystem,
    IntegralSpace,
    NondegenerateIntegral,
    double_dual_evaluation,
    dual_hopf_algebroid,
    dual_weak_hopf,
    duality_diagram,
    frobenius_check,
    frobenius_system,
    integral_space,
    intpr_equivalences,
    lac_check,
    ls_antipode,
    ls_right,
    nondegeneracy,
    transport_integral,
    twap,
    verify_bgdnd,
    verify_bgdnd_right,
    weak_dual_iso,
)
from .catalog import (
    Character,
    FiniteGroup,
    all_fixtures,
    character_twisted_hopf,
    function_algebra_hopf,
    group_algebra,
    group_hopf_algebroid,
    group_weak_hopf,
    pair_groupoid_hopf_algebroid,
    pair_groupoid_weak_hopf,
)
from .specfile import (
    SpecBuilder,
    SpecError,
    SpecFile,
    parse,
    parse_field,
    parse_text,
    spec_from_hopf,
    spec_from_right_bialgebroid,
)

QQ = RationalField()

__all__ = [
    "QQ",
    # exactfield
    "RationalField",
    "PrimeField",
    "GFElement",
    "Matrix",
    "Subspace",
    "field_from_name",
    # report
    "Check",
    "Report",
    # algebra
    "HOM",
    "ANTI",
    "Algebra",
    "AlgebraElement",
    "AlgebraMap",
    "opposite",
    "verify_algebra",
    "verify_map",
    "flip_tensor",
    "tensor_apply",
    # bimodtensor
    "BalancedTensorSpace",
    "plain_tensor_space",
    # bialgebroid
    "LeftBialgebroid",
    "RightBialgebroid",
    "verify_left_bialgebroid",
    "verify_right_bialgebroid",
    "verify_left_morphism",
    "verify_right_morphism",
    # dualspace
    "LOWER_STAR",
    "STAR_LOWER",
    "UPPER_STAR",
    "STAR_UPPER",
    "DualBialgebroid",
    "DualModule",
    "act_lower_star",
    "act_star_lower",
    "act_upper_star",
    "act_star_upper",
    "dual_lower_star",
    "dual_star_lower",
    "dual_upper_star",
    "dual_star_upper",
    "transpose_left",
    "transpose_right",
    # hopfcore
    "GaloisMaps",
    "HopfAlgebroid",
    "antipode_uniqueness",
    "check_lu_axioms",
    "check_luiiv",
    "reconstruct_left",
    "reconstruct_right",
    "verify_galois",
    "verify_hopf",
    "verify_sisom",
    # twistlab
    "SeparabilityStructure",
    "WeakHopfAlgebra",
    "apply_twist",
    "convolution_inverse",
    "diagonal_separability",
    "hopf_algebra_criterion",
    "recover_twist",
    "separability_from_weak",
    "twisted_antipode",
    "verify_separability",
    "verify_twist",
    "verify_weak_hopf",
    "weak_bialgebra_from_sep",
    "weak_hopf_to_hopf_algebroid",
    "wha_decide",
    # integrallab
    "LEFT",
    "RIGHT",
    "Degenerate",
    "FrobeniusSystem",
    "IntegralSpace",
    "NondegenerateIntegral",
    "double_dual_evaluation",
    "dual_hopf_algebroid",
    "dual_weak_hopf",
    "duality_diagram",
    "frobenius_check",
    "frobenius_system",
    "integral_space",
    "intpr_equivalences",
    "lac_check",
    "ls_antipode",
    "ls_right",
    "nondegeneracy",
    "transport_integral",
    "twap",
    "verify_bgdnd",
    "verify_bgdnd_right",
    "weak_dual_iso",
    # catalog
    "Character",
    "FiniteGroup",
    "all_fixtures",
    "character_twisted_hopf",
    "function_algebra_hopf",
    "group_algebra",
    "group_hopf_algebroid",
    "group_weak_hopf",
    "pair_groupoid_hopf_algebroid",
    "pair_groupoid_weak_hopf",
    # specfile
    "SpecBuilder",
    "SpecError",
    "SpecFile",
    "parse",
    "parse_field",
    "parse_text",
    "spec_from_hopf",
    "spec_from_right_bialgebroid",
]
