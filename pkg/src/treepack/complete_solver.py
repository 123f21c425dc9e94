"""Exact solver for complete-graph instances.

The solver runs in two stages over a shared, mutating capacity vector.
Stage one builds one root path per tree: the path threads through every
vertex that still has spare capacity (ascending id after the root) and
charges one unit to each path vertex except the last.  If the root is out
of capacity the path degenerates to the root alone.  Stage two turns each
path into a tree: scanning the path from the root, every vertex with
leftover capacity adopts the still-missing vertices (smallest id first)
until the tree spans everything or capacity runs out.

On a complete graph this is optimal.  Every capacity unit spent buys one
extra vertex occurrence, at most min(c_root, K) trees can be non-null
(each needs one root slot), and a tree holds at most n - 1 non-root
occurrences, which yields the closed-form optimum of optimal_objective.
"""

from __future__ import annotations

from .core import KIND_COMPLETE, Instance, Packing, RootedTree


def _require_complete(inst: Instance) -> None:
    if inst.kind != KIND_COMPLETE:
        raise ValueError(f"kind: expected a complete instance, got {inst.kind!r}")


def build_stage_paths(inst: Instance) -> tuple[list[list[int]], list[int]]:
    """Build the K root paths; returns (paths, residual capacities).

    Each path starts at the root; a single-vertex path pays nothing since
    its only vertex is also the termination vertex.
    """
    _require_complete(inst)
    caps = list(inst.capacities)
    root = inst.root
    rest = [v for v in range(inst.n) if v != root]
    paths: list[list[int]] = []
    for _ in range(inst.num_trees):
        if caps[root] == 0:
            paths.append([root])
            continue
        path = [root] + [v for v in rest if caps[v] > 0]
        for v in path[:-1]:
            caps[v] -= 1
        paths.append(path)
    return paths, caps


def attach_stage(inst: Instance, paths: list[list[int]], residual: list[int]) -> Packing:
    """Grow each path into a tree using the shared residual capacity.

    Only path vertices are scanned for spare capacity.  That is enough:
    capacities never increase, so a vertex missing from path k had zero
    capacity when the path was built and still has zero now; every unit
    usable by tree k sits on the path itself.
    """
    _require_complete(inst)
    caps = list(residual)
    trees = []
    for path in paths:
        parent = {path[i]: path[i - 1] for i in range(1, len(path))}
        members = set(path)
        missing = [v for v in range(inst.n) if v not in members]
        at = 0
        for v in path:
            while at < len(missing) and caps[v] > 0:
                parent[missing[at]] = v
                at += 1
                caps[v] -= 1
            if at == len(missing):
                break
        trees.append(RootedTree(inst.root, parent))
    return Packing(tuple(trees))


def solve_complete(inst: Instance) -> Packing:
    """Optimal packing of a complete instance in O(n K) time."""
    paths, residual = build_stage_paths(inst)
    return attach_stage(inst, paths, residual)


def optimal_objective(inst: Instance) -> int:
    """Closed-form optimum for complete instances.

    With active = min(c_root, K) trees that can be non-null, the spanned
    occurrences in those trees are min(active + sum(c), active * n); each
    of the K - active leftover trees still contributes its root.
    """
    _require_complete(inst)
    active = min(inst.capacities[inst.root], inst.num_trees)
    spanned = min(active + sum(inst.capacities), active * inst.n)
    return spanned + (inst.num_trees - active)
