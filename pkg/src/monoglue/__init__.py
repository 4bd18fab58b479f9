"""Monodromic perverse sheaves and mixed Hodge modules on the complex line,
computed exactly through their gluing quivers."""

from .fourdual import fourier, verdier_dual
from .gluecat import (
    GlueMorphism,
    GlueObject,
    KClass,
    direct_sum,
    exact_decompose,
    hom_space,
    is_isomorphic,
    is_simple,
    jordan_holder_class,
    monodromy,
)
from .hodge import (
    HodgeGlueObject,
    MixedHodgeStructure,
    hodge_dual,
    hodge_fourier,
    mhs_dual,
    mhs_validate,
    rat_forget,
    tate,
    tate_twist,
)
from .sheafdict import (
    LocalSystem,
    constant,
    costalk_at_zero,
    extend,
    forget_supports,
    global_cohomology,
    skyscraper,
    stalk_at_zero,
)

__version__ = "0.1.0"

__all__ = [
    "GlueMorphism",
    "GlueObject",
    "HodgeGlueObject",
    "KClass",
    "LocalSystem",
    "MixedHodgeStructure",
    "constant",
    "costalk_at_zero",
    "direct_sum",
    "exact_decompose",
    "extend",
    "forget_supports",
    "fourier",
    "global_cohomology",
    "hodge_dual",
    "hodge_fourier",
    "hom_space",
    "is_isomorphic",
    "is_simple",
    "jordan_holder_class",
    "mhs_dual",
    "mhs_validate",
    "monodromy",
    "rat_forget",
    "skyscraper",
    "stalk_at_zero",
    "tate",
    "tate_twist",
    "verdier_dual",
]
