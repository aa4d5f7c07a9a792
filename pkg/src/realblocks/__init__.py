"""Self-dual modules of real blocks with cyclic defect groups.

The package works with planar Brauer trees: it lists the self-dual
indecomposable modules, places them in the stable Auslander-Reiten tube and
decides their orthogonal or symplectic type.
"""

from .catalog import SelfDualCatalog, classify, locate
from .chartab import CharacterTable, fs_indicator, parse_table, twisted_indicator
from .formtype import FormType, HookTypeAssignment, TypeVerdict, normal_defect_type, resolve_type
from .janusz import JanuszDescriptor, dual_descriptor, enumerate_descriptors, validate_descriptor
from .star import StarCase, StarModule, StarParams
from .tree import PlanarBrauerTree, derive_reflection, parse_tree, stem_stats
from .tube import TubePosition, self_dual_census

__all__ = [
    "CharacterTable", "FormType", "HookTypeAssignment", "JanuszDescriptor", "PlanarBrauerTree",
    "SelfDualCatalog", "StarCase", "StarModule", "StarParams", "TubePosition", "TypeVerdict",
    "classify", "derive_reflection", "dual_descriptor", "enumerate_descriptors", "fs_indicator",
    "locate", "normal_defect_type", "parse_table", "parse_tree", "resolve_type", "self_dual_census",
    "stem_stats", "twisted_indicator", "validate_descriptor",
]
