"""Exact stems, Chevalley bases and hypercomplex structures on compact Lie algebras."""

__version__ = "0.1.0"

from .scalars import KScalar, zeta8_power  # noqa: E402
from .roots import AlgebraSpec, RootSystem, generate_root_system, parse_spec  # noqa: E402
from .stem import Stem, compute_stem, verify_stem_axioms  # noqa: E402
from .chevalley import StructureConstants, compute_structure_constants  # noqa: E402
from .algebra import Element, LinOp, ReductiveAlgebra, algebra_for, stem_frame  # noqa: E402
from .cayley import cayley_transform, opposition_involution  # noqa: E402
from .hypercomplex import (HyperStructure, build_I_canonical, build_J_cayley,  # noqa: E402
                           build_J_direct, check_admissible, classify_algebra,
                           extract_matching_blocks, is_integrable, verify_hypercomplex)

__all__ = [
    "KScalar", "zeta8_power", "AlgebraSpec", "RootSystem", "generate_root_system",
    "parse_spec", "Stem", "compute_stem", "verify_stem_axioms", "StructureConstants",
    "compute_structure_constants", "Element", "LinOp", "ReductiveAlgebra", "algebra_for",
    "stem_frame", "cayley_transform", "opposition_involution", "HyperStructure",
    "build_I_canonical", "build_J_cayley", "build_J_direct", "check_admissible",
    "classify_algebra", "extract_matching_blocks", "is_integrable", "verify_hypercomplex",
]
