"""Exact Kazhdan-Lusztig combinatorics of dihedral groups.

Builds the integral group ring of D_2n in its Kazhdan-Lusztig basis, the
subquotient rings Q_n and subrings A_n it induces, their exact character
tables over real quadratic fields, and the exhaustive classification of
transitive non-negative-integer matrix modules over them.
"""

from .basedring import (
    BasedRing,
    RingError,
    RingFormatError,
    RingReport,
    TruncationError,
    cells_of,
    ring_from_text,
    ring_to_text,
    subquotient_qn,
    subring_an,
    verify,
)
from .characters import (
    CharacterError,
    CharacterTable,
    DecompositionError,
    ModuleDecomposition,
    NonCommutativeError,
    SpecialCharacterError,
    character_table,
    decompose,
    special_character,
)
from .classifier import (
    ANNOTATIONS,
    BUNDLED_RING_IDS,
    Candidate,
    ClassificationReport,
    ClassifierError,
    EXPECTED_CANDIDATES,
    ModuleFilter,
    SearchOutcome,
    bruteforce_matrix_modules,
    bundled_ring,
    classify,
    default_entry_bound,
    feasible_rank_profiles,
    named_filters,
    rigid_generator,
    solve_matrix_modules,
)
from .dihedral import DihedralElement, DihedralGroup
from .klring import (
    CellPartition,
    KLStructureConstants,
    PositivityError,
    compute_cells,
    kl_basis_element,
    structure_constants,
    to_kl_coords,
)
from .matrixmodule import (
    MatrixModule,
    canonical_module,
    is_transitive,
    module_from_mats,
    satisfies_ring_relations,
    trivial_module,
)
from .quadfield import (
    FieldMismatchError,
    NonRealRootsError,
    QuadNum,
    compare,
    solve_quadratic_monic,
)
from .selfcheck import SuiteReport, run_suite

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # dihedral
    "DihedralElement",
    "DihedralGroup",
    # klring
    "CellPartition",
    "KLStructureConstants",
    "PositivityError",
    "compute_cells",
    "kl_basis_element",
    "structure_constants",
    "to_kl_coords",
    # quadfield
    "FieldMismatchError",
    "NonRealRootsError",
    "QuadNum",
    "compare",
    "solve_quadratic_monic",
    # basedring
    "BasedRing",
    "RingError",
    "RingFormatError",
    "RingReport",
    "TruncationError",
    "cells_of",
    "ring_from_text",
    "ring_to_text",
    "subquotient_qn",
    "subring_an",
    "verify",
    # characters
    "CharacterError",
    "CharacterTable",
    "DecompositionError",
    "ModuleDecomposition",
    "NonCommutativeError",
    "SpecialCharacterError",
    "character_table",
    "decompose",
    "special_character",
    # matrix modules and the classifier
    "MatrixModule",
    "canonical_module",
    "is_transitive",
    "module_from_mats",
    "satisfies_ring_relations",
    "trivial_module",
    "ANNOTATIONS",
    "BUNDLED_RING_IDS",
    "Candidate",
    "ClassificationReport",
    "ClassifierError",
    "EXPECTED_CANDIDATES",
    "ModuleFilter",
    "SearchOutcome",
    "bruteforce_matrix_modules",
    "bundled_ring",
    "classify",
    "default_entry_bound",
    "feasible_rank_profiles",
    "named_filters",
    "rigid_generator",
    "solve_matrix_modules",
    # verification
    "SuiteReport",
    "run_suite",
]
