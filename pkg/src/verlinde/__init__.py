"""Certified Verlinde dimension numbers for the classical groups.

Exact root-system and weight-lattice arithmetic (rational throughout),
arbitrary-precision sine-product evaluation with integer certification,
and two independent computation paths for the orthogonal groups.
"""

from .formula import (
    DYNKIN_INDEX,
    DynkinIndices,
    VerlindeResult,
    certified_torus_order,
    delta,
    n_so,
    n_sp,
    theta_dim,
    torus_order,
    torus_order_oracle,
    verlinde_product_quotient,
    verlinde_quotient,
    verlinde_sc,
)
from .numeric import DEFAULT_PRECISION, IntegralityError
from .rootsys import GroupType, RootSystem, build_root_system, root_system
from .so_oracle import USet, enumerate_usets, n_so_oracle, uset_delta_b, uset_delta_d
from .suite import (
    SuiteReport,
    run_default_suite,
    run_so_identity,
    run_strange_duality_symmetry,
    run_unitarity,
)
from .weights import (
    CenterSpec,
    LevelWeightSet,
    OrbitSet,
    UCoordinates,
    center_act,
    enumerate_level_weights,
    orbit_decompose,
    restrict_to_quotient,
    u_coords,
)

__version__ = "0.1.0"

__all__ = [
    "CenterSpec",
    "DEFAULT_PRECISION",
    "DYNKIN_INDEX",
    "DynkinIndices",
    "GroupType",
    "IntegralityError",
    "LevelWeightSet",
    "OrbitSet",
    "RootSystem",
    "SuiteReport",
    "UCoordinates",
    "USet",
    "VerlindeResult",
    "build_root_system",
    "center_act",
    "certified_torus_order",
    "delta",
    "enumerate_level_weights",
    "enumerate_usets",
    "n_so",
    "n_so_oracle",
    "n_sp",
    "orbit_decompose",
    "restrict_to_quotient",
    "root_system",
    "run_default_suite",
    "run_so_identity",
    "run_strange_duality_symmetry",
    "run_unitarity",
    "theta_dim",
    "torus_order",
    "torus_order_oracle",
    "u_coords",
    "uset_delta_b",
    "uset_delta_d",
    "verlinde_product_quotient",
    "verlinde_quotient",
    "verlinde_sc",
]
