"""Exact computations in Drinfeld centers of pointed fusion categories.

The package constructs the center of a twisted G-graded vector space
category, builds and machine-verifies its ribbon Grothendieck-Verdier
structure (dualizing object, duality functor, twist), classifies the
alternative ribbon extensions through the balanced transparent Picard
group, and computes conformal-block dimensions in the fusion ring.  All
arithmetic is exact over cyclotomic fields.
"""

from .center import (
    CenterMorphism,
    CenterObject,
    balancing,
    balancing_scalar,
    double_braiding,
    dual_object,
    dualizing_object,
    hom_dim,
    tensor,
    unit_object,
    verify_half_braiding,
)
from .cocycles import ThreeCocycle, cyclic_cocycle, trivial_cocycle, verify_three_cocycle
from .groups import FiniteGroup, GroupHom, character_group, cyclic_group, group_from_generators
from .pointed import PointedCategory, base_sphericity, pivotal_scalar, pointed_category, verify_pivotality
from .scalars import Cyclotomic, RootOfUnity, cyclotomic_reduce, rou_combine
from .simples import Simple, simples

__all__ = [
    "CenterMorphism",
    "CenterObject",
    "Cyclotomic",
    "FiniteGroup",
    "GroupHom",
    "PointedCategory",
    "RootOfUnity",
    "Simple",
    "ThreeCocycle",
    "balancing",
    "balancing_scalar",
    "base_sphericity",
    "character_group",
    "cyclic_cocycle",
    "cyclic_group",
    "cyclotomic_reduce",
    "double_braiding",
    "dual_object",
    "dualizing_object",
    "group_from_generators",
    "hom_dim",
    "pivotal_scalar",
    "pointed_category",
    "rou_combine",
    "simples",
    "tensor",
    "trivial_cocycle",
    "unit_object",
    "verify_half_braiding",
    "verify_pivotality",
    "verify_three_cocycle",
]
