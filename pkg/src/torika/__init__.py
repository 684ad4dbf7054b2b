"""Exact invariants of toric varieties with finite descent data.

The package computes, in exact integer arithmetic: Smith normal forms
and finitely generated abelian groups; group cohomology of lattices
with a finite group action; validated equivariant fans; the pure
divisorial truncation, standard toric variety and comparison morphism;
and the divisor class group and finite-level Brauer kernel.
"""

from .cohomology import (CohomologyResult, GLattice, GLatticeMap,
                         InducedCohomologyMap, coboundary_matrix, cohomology,
                         induced_h2_map, kernel_of_h2_map,
                         kernel_of_h2_map_via_presentations,
                         permutation_module, tate_cyclic_h2, trivial_lattice)
from .datum import (ToricDatum, datum_from_fan, dump_datum, load_datum,
                    serialize_datum)
from .errors import (DatumError, FanValidationError, IncompatibleModulesError,
                     MalformedGroupError, MalformedSubgroupError,
                     NotDescendableError, NotInFanError, ResourceLimitError,
                     StageError, TorikaError, UnsupportedGroupError)
from .fans import (Cone, GFan, Ray, ValidationReport, cone_contains_point,
                   is_smooth, is_smooth_cone, orbit_count, orbit_dimension,
                   primitive_vector, ray_orbits, support_lattice_points,
                   validate_fan)
from .groups import (GROUP_PRESETS, FiniteGroup, Subgroup, cyclic_group,
                     group_preset, klein_four_group, symmetric_group_3,
                     trivial_group)
from .invariants import InvariantReport, brauer_kernel, class_group, full_report
from .linalg import (FinAbGroup, IntMatrix, SmithDecomposition, cokernel,
                     kernel_basis, smith_normal_form, solve_integer)
from .structure import (AffineStructure, FanMorphism, TropicalCheckResult,
                        affine_structure, character_lattice, divisor_map,
                        is_pure_divisorial, pure_divisorial_support,
                        pure_divisorial_truncation, ray_permutation_lattice,
                        rho_map, standard_fan, tropical_int_check)

__version__ = "0.1.0"

__all__ = [
    "AffineStructure", "CohomologyResult", "Cone", "DatumError",
    "FanMorphism", "FanValidationError", "FinAbGroup", "FiniteGroup",
    "GFan", "GLattice", "GLatticeMap", "GROUP_PRESETS",
    "IncompatibleModulesError", "InducedCohomologyMap", "IntMatrix",
    "InvariantReport", "MalformedGroupError", "MalformedSubgroupError",
    "NotDescendableError", "NotInFanError", "Ray", "ResourceLimitError",
    "SmithDecomposition", "StageError", "Subgroup", "ToricDatum",
    "TorikaError", "TropicalCheckResult", "UnsupportedGroupError",
    "ValidationReport", "affine_structure", "brauer_kernel",
    "character_lattice", "class_group", "coboundary_matrix", "cohomology",
    "cokernel", "cone_contains_point", "cyclic_group", "datum_from_fan",
    "divisor_map", "dump_datum", "full_report", "group_preset",
    "induced_h2_map", "is_pure_divisorial", "is_smooth", "is_smooth_cone",
    "kernel_basis", "kernel_of_h2_map", "kernel_of_h2_map_via_presentations",
    "klein_four_group", "load_datum", "orbit_count", "orbit_dimension",
    "permutation_module", "primitive_vector", "pure_divisorial_support",
    "pure_divisorial_truncation",
    "ray_orbits", "ray_permutation_lattice", "rho_map", "serialize_datum",
    "smith_normal_form", "solve_integer", "standard_fan",
    "support_lattice_points", "symmetric_group_3", "tate_cyclic_h2",
    "trivial_group", "trivial_lattice", "tropical_int_check", "validate_fan",
]
