"""Exact computational root-datum folding and conorm maps.

Everything here is integer or rational arithmetic: lattice maps are integer
matrices, torus points are torsion vectors over Q/Z, and every check is an
exact equality.  No floats anywhere.
"""

from .exact_lattice import (
    LatticeMap,
    Sublattice,
    QuotientLattice,
    TorsionVector,
    smith_normal_form,
    fixed_sublattice,
    coinvariant_quotient,
    solve_torsion_fixed,
)
from .root_datum import (
    RootDatum,
    BasedRootDatum,
    WeylElement,
    validate,
    weyl_group,
    invariant_inner_product,
    classify_length,
    cartan_type,
    is_closed_subsystem,
    dual_root_datum,
)
from .chevalley import StructureConstants, build_structure_constants, propagate_scalars
from .gamma_action import (
    FiniteGroup,
    GammaAction,
    validate_action,
    pinned_projection,
    root_orbit,
    root_stabilizer,
    root_space_scalar,
    stabilizer_hypothesis,
)
from .folding import FoldedDatum, fold, restricted_root_comparison, dual_length_comparison
from .duality_conorm import (
    NormData,
    ConormData,
    Isogeny,
    build_conorm,
    dual_isogeny,
    verify_isogeny_square,
)
from .classes import (
    GeometricClass,
    StableClass,
    FrobeniusStructure,
    canonicalize_class,
    conorm_point,
    enumerate_stable_classes,
    lift_stable_class,
    levi_for_element,
    rotation_action,
    subgroup_action,
    induced_quotient_action,
    verify_conorm_well_defined,
    verify_product_conorm,
    verify_trivial_lift,
    verify_normal_subgroup_composition,
    verify_pinning_factorization,
    verify_levi_factorization,
)
from . import catalog

__all__ = [
    "LatticeMap", "Sublattice", "QuotientLattice", "TorsionVector",
    "smith_normal_form", "fixed_sublattice", "coinvariant_quotient", "solve_torsion_fixed",
    "RootDatum", "BasedRootDatum", "WeylElement", "validate", "weyl_group",
    "invariant_inner_product", "classify_length", "cartan_type",
    "is_closed_subsystem", "dual_root_datum",
    "StructureConstants", "build_structure_constants", "propagate_scalars",
    "FiniteGroup", "GammaAction", "validate_action", "pinned_projection",
    "root_orbit", "root_stabilizer", "root_space_scalar", "stabilizer_hypothesis",
    "FoldedDatum", "fold", "restricted_root_comparison", "dual_length_comparison",
    "NormData", "ConormData", "Isogeny", "build_conorm", "dual_isogeny",
    "verify_isogeny_square",
    "GeometricClass", "StableClass", "FrobeniusStructure",
    "canonicalize_class", "conorm_point", "enumerate_stable_classes",
    "lift_stable_class", "levi_for_element", "rotation_action",
    "subgroup_action", "induced_quotient_action",
    "verify_conorm_well_defined", "verify_product_conorm", "verify_trivial_lift",
    "verify_normal_subgroup_composition",
    "verify_pinning_factorization", "verify_levi_factorization",
    "catalog",
]
