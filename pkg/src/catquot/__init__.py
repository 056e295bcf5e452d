"""Quotients of finite posets and loopfree categories by group actions.

The package models finite categories as explicit tables, groups as
automorphism sets with orbit machinery, and builds the categorical
quotient, the nerve, the quotient complex and the canonical comparison
map between them.  Condition checkers decide when the comparison map is
an isomorphism and when the quotient is again a poset; exact homology,
Euler characteristics and Möbius values back the counting identities.
"""

from .actions import (
    ActionError,
    ActionGroup,
    Subcategory,
    fixed_subcategory,
    full_subcategory,
    functor_from_object_map,
    generate_action,
    induced_bd_action,
    is_horizontal,
    poset_action,
    restrict_action,
    stabilizer,
    subcategory,
    subgroup_action,
)
from .conditions import (
    ConditionReport,
    ConditionUnmet,
    FamilyError,
    check_all_ct,
    check_c,
    check_ct,
    check_r,
    check_s,
    check_sr,
    check_srp,
    check_strong_s,
    stabilizer_family,
)
from .fincat import (
    CatFunctor,
    CategoryError,
    FiniteCategory,
    InternalCheckError,
    Poset,
    PosetError,
    ValidationReport,
    barycentric_subdivision,
    category_from_poset,
    chain_elements,
    functor_compose,
    identity_functor,
    is_loopfree,
    is_poset_category,
    underlying_order,
    validate_category,
    validate_functor,
)
from .formulas import (
    IdentityReport,
    LabeledLattice,
    betti_multiplicity,
    burnside_euler,
    gm_quotient,
    mobius_quotient,
)
from .homology import (
    HomologyResult,
    boundary_matrix,
    euler_characteristic,
    homology,
    induced_homology_action,
    mobius,
    mobius_recursive,
    reduced_euler_characteristic,
    smith_normal_form,
    trivial_multiplicity,
)
from .nerve import (
    DeltaComplex,
    LambdaReport,
    SimplicialMap,
    canonical_lambda,
    face_poset,
    fixed_subcomplex,
    induced_simplicial_map,
    lambda_skeleton_report,
    longest_chain_length,
    nerve,
    nerve_quotient,
)
from .quotient import (
    NotAPosetError,
    QuotientCategory,
    is_quotient_poset,
    morphism_classes,
    poset_quotient,
    quotient_category,
)

__version__ = "0.1.0"
