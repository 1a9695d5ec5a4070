"""Finite 2-groups on explicit tables: group cohomology, crossed modules,
monoidal groupoid coherence and classification by (G, H, alpha, [a])."""

from .errors import AlgebraError
from .finite_algebra import FinAbGroup, FiniteGroup, GAction, GroupHom, cyclic_group
from .cohomology import Module, NormalizedCochain, cohomology_group, differential, is_cocycle
from .twogroups import CrossedModule, Quadruple, StrictTwoGroup
from .monoidal_groupoid import InverseChoice, MonoidalGroupoid
from .classification import SpecialHom, TwoHom

__version__ = "0.1.0"

__all__ = [
    "AlgebraError", "FinAbGroup", "FiniteGroup", "GAction", "GroupHom", "cyclic_group",
    "Module", "NormalizedCochain", "cohomology_group", "differential", "is_cocycle",
    "CrossedModule", "Quadruple", "StrictTwoGroup", "InverseChoice", "MonoidalGroupoid",
    "SpecialHom", "TwoHom",
]
