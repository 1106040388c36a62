"""Exact service capacity regions of erasure-coded storage systems.

Given a storage code over n nodes of per-node capacity mu, the package
computes, with exact rational arithmetic throughout, the set of per-file
request-rate vectors the system can serve: membership tests with witness
allocations, maximal rates, support values, exact two-file boundary
chains (with an independent Fourier-Motzkin cross-check), a waterfilling
scheduler for systematic MDS layouts, the closed-form region
descriptions for MDS / simplex / hybrid codes, and a harness that
compares the closed forms against the LP ground truth.
"""

from .boundary import PiecewiseBoundary, chain_from_region_vertices
from .codes import (CodeConstructionError, CodeSpec, HybridSpec, make_hybrid,
                    make_mds_systematic, make_replication, make_simplex)
from .closed_form import (add_systematic_node, all_coded_boundary, hybrid_boundary,
                          hybrid_boundary_by_addition, mds_halfrate_chain,
                          mds_halfrate_membership, mds_outer_bound,
                          simplex_allocation, simplex_graph_stats, simplex_membership)
from .exactlp import (EQUAL, INFEASIBLE, LESS_EQUAL, OPTIMAL, UNBOUNDED,
                      IterationLimit, LpProblem, LpResult, lp_feasible, lp_solve)
from .recovery import (InstanceTooLarge, RecoverySetIndex, can_recover,
                       enumerate_recovery_sets)
from .region import (Allocation, RegionError, SystemConfig, max_rate,
                     max_weighted_sum, membership, project_fm, trace_boundary_2d)
from .verify import (GapRow, RegionReport, brute_force_membership,
                     compare_boundaries, render_report, sweep_outer_bound)
from .waterfill import (InfeasibleDemand, is_systematic_mds, validate_allocation,
                        waterfill, waterfill_max_coded)

__all__ = [
    "Allocation", "CodeConstructionError", "CodeSpec", "GapRow", "HybridSpec",
    "InfeasibleDemand", "InstanceTooLarge", "IterationLimit", "LpProblem",
    "LpResult", "PiecewiseBoundary", "RecoverySetIndex", "RegionError",
    "RegionReport", "SystemConfig", "add_systematic_node", "all_coded_boundary",
    "brute_force_membership", "can_recover", "chain_from_region_vertices",
    "compare_boundaries", "enumerate_recovery_sets", "hybrid_boundary",
    "hybrid_boundary_by_addition", "is_systematic_mds", "lp_feasible", "lp_solve",
    "make_hybrid", "make_mds_systematic", "make_replication", "make_simplex",
    "max_rate", "max_weighted_sum", "mds_halfrate_chain", "mds_halfrate_membership",
    "mds_outer_bound", "membership", "project_fm", "render_report",
    "simplex_allocation", "simplex_graph_stats", "simplex_membership",
    "sweep_outer_bound", "trace_boundary_2d", "validate_allocation", "waterfill",
    "waterfill_max_coded",
]
