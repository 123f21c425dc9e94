"""Capacity-bounded rooted-tree packing: model, exact solvers, oracle, CNF gadget.

Pack K trees, all rooted at the same vertex, into a graph so that every
vertex's child count summed over the trees stays within its capacity, and
the total number of spanned vertex occurrences is maximum.  Exact
polynomial solvers cover complete graphs and trees; general graphs get an
exhaustive oracle for desk-size instances and a labeled greedy baseline.
"""

from .complete_solver import (
    attach_stage,
    build_stage_paths,
    optimal_objective,
    solve_complete,
)
from .core import (
    KIND_COMPLETE,
    KIND_GENERAL,
    KIND_TREE,
    Instance,
    Packing,
    RootedTree,
    VerificationReport,
    Violation,
    instance_from_dict,
    instance_to_dict,
    load_instance,
    load_packing,
    objective,
    packing_from_dict,
    packing_to_dict,
    save_instance,
    save_packing,
    verify_packing,
)
from .oracle import SearchLimitExceeded, brute_force_solve, greedy_general
from .reduction import (
    ReductionOutput,
    SatInstance,
    extract_assignment,
    load_dimacs,
    parse_dimacs,
    reduce_3sat,
)
from .tree_solver import solve_mckp, solve_tree, stripe_values

__version__ = "0.1.0"

__all__ = [
    "KIND_COMPLETE",
    "KIND_GENERAL",
    "KIND_TREE",
    "Instance",
    "Packing",
    "ReductionOutput",
    "RootedTree",
    "SatInstance",
    "SearchLimitExceeded",
    "VerificationReport",
    "Violation",
    "attach_stage",
    "brute_force_solve",
    "build_stage_paths",
    "extract_assignment",
    "greedy_general",
    "instance_from_dict",
    "instance_to_dict",
    "load_dimacs",
    "load_instance",
    "load_packing",
    "objective",
    "optimal_objective",
    "packing_from_dict",
    "packing_to_dict",
    "parse_dimacs",
    "reduce_3sat",
    "save_instance",
    "save_packing",
    "solve_complete",
    "solve_mckp",
    "solve_tree",
    "stripe_values",
    "verify_packing",
]
