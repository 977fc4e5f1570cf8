"""Finite topological convexity spaces, preconvexity spaces and their lattice duals."""

from .adjunction import (
    cc,
    check_adjunction,
    check_idempotent,
    geometric_embedding,
    is_embedding,
    is_functor,
    is_geometric,
    is_teetotal,
    restrict,
    teetotal_report,
)
from .errors import *  # noqa: F401,F403
from .examples import (
    FiniteMetric,
    MeasureSpace,
    lattice_ideal_space,
    measure_algebra_space,
    metric_betweenness_space,
    subalgebra_space,
)
from .lattice import FiniteLattice, LatticeMap, PointedLattice, lattice_adjoints, left_adjoint, right_adjoint
from .sets import (
    GroundSet,
    SetFamily,
    Subset,
    directed_union_closure,
    finite_union_closure,
    hull,
    intersection_closure,
    is_closure_system,
    overline_closure,
)
from .spaces import (
    PreconvexSpace,
    SpaceMap,
    TopConvexSpace,
    enumerate_homs,
    is_compatible,
    is_pre_hom,
    is_tc_hom,
    validate_preconvex,
    validate_topconvex,
)
from .stone import (
    check_pointed_morphism,
    closed_coframe,
    cocartesian_lift,
    coframe_fibre_bounds,
    lattice_points,
    separation_flags,
    space_from_pointed,
    stone_roundtrip_lattice,
    stone_roundtrip_space,
)
from .suplat import (
    PartialSupLattice,
    equivalence_roundtrip,
    g_functor,
    hom_equivalence_check,
    is_partial_sup_hom,
    is_tcg,
    j_from_s,
    preconvex_lattice,
    s_from_j,
    sup_to_topconvex,
    validate_partial_sup,
)
from .symmetric import alpha_delta, classify_perm_homs, coxeter_metric, half_space, perm_space

__version__ = "0.1.0"
