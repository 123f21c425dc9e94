"""Exact solver for tree instances.

Every vertex v gets a vector of sub-instance optima: entry k (1-based) is
the best total occupancy achievable inside v's subtree when v itself is
served by k trees.  A leaf scores k, just itself once per tree.  An inner
vertex combines its children with a small multiple-choice knapsack: each
child may be served at one level i in 0..k, costing i capacity units and
gaining the child's entry i.  The root's K-th entry is the instance
optimum, and backtracking the knapsack choices top-down rebuilds one
optimal packing.
"""

from __future__ import annotations

from collections import deque
from typing import Sequence

from .core import KIND_TREE, Instance, Packing, RootedTree


def solve_mckp(
    stripes: int, capacity: int, child_values: Sequence[Sequence[int]]
) -> tuple[int, list[int]]:
    """Multiple-choice knapsack over the children of one vertex.

    Args:
        stripes: number of trees k the vertex itself is served by (k >= 1).
        capacity: child slots available at the vertex.
        child_values: per child, gains[i-1] is the payoff for level i.

    Returns:
        (value, allocations) with value = stripes + sum of chosen gains and
        one level in 0..stripes per child (0 means not served), summing to
        at most capacity.  Among equal-value options for a child the lowest
        level wins, which keeps the result deterministic and biases toward
        spare capacity.

    The table for d children only needs capacity columns up to k*d: beyond
    that every child can already sit at the top level, so the values
    plateau and lookups clamp to the last stored column.
    """
    k = stripes
    if k < 1:
        raise ValueError(f"stripes: must be >= 1, got {k}")
    if capacity < 0:
        raise ValueError(f"capacity: must be >= 0, got {capacity}")
    for j, values in enumerate(child_values):
        if len(values) < k:
            raise ValueError(f"child {j}: value vector has {len(values)} entries, need {k}")

    choices: list[list[int]] = []
    prev = [k]  # no children: worth k at any capacity
    for d, values in enumerate(child_values, start=1):
        limit = min(capacity, k * d)
        row = [k] * (limit + 1)
        choice = [0] * (limit + 1)
        top = len(prev) - 1
        for c in range(1, limit + 1):
            best = prev[min(c, top)]
            pick = 0
            for i in range(1, min(k, c) + 1):
                cand = prev[min(c - i, top)] + values[i - 1]
                if cand > best:
                    best, pick = cand, i
            row[c] = best
            choice[c] = pick
        choices.append(choice)
        prev = row

    value = prev[min(capacity, len(prev) - 1)]
    allocations = [0] * len(child_values)
    c = capacity
    for d in range(len(child_values) - 1, -1, -1):
        pick = choices[d][min(c, len(choices[d]) - 1)]
        allocations[d] = pick
        c -= pick
    return value, allocations


def _rooted(inst: Instance) -> tuple[list[list[int]], list[int]]:
    """Children lists oriented away from the root, plus a root-first order."""
    if inst.kind != KIND_TREE:
        raise ValueError(f"kind: expected a tree instance, got {inst.kind!r}")
    children: list[list[int]] = [[] for _ in range(inst.n)]
    order = [inst.root]
    seen = {inst.root}
    queue = deque([inst.root])
    while queue:
        u = queue.popleft()
        for w in inst.neighbors(u):
            if w not in seen:
                seen.add(w)
                children[u].append(w)
                order.append(w)
                queue.append(w)
    return children, order


def stripe_values(inst: Instance) -> dict[int, list[int]]:
    """Sub-instance optima for every vertex of a tree instance.

    Entry k-1 of vertex v's vector is the best occupancy of v's subtree
    with v served by k trees.  Children are finished before their parents
    (iterative, so path-like trees of any depth are fine).
    """
    children, order = _rooted(inst)
    caps = inst.capacities
    count = inst.num_trees
    values: dict[int, list[int]] = {}
    for u in reversed(order):
        kids = children[u]
        if not kids:
            values[u] = list(range(1, count + 1))
        else:
            vecs = [values[w] for w in kids]
            values[u] = [solve_mckp(k, caps[u], vecs)[0] for k in range(1, count + 1)]
    return values


def solve_tree(inst: Instance, *, value_only: bool = False) -> tuple[int, Packing | None]:
    """Optimal packing of a tree instance.

    Returns the optimal objective and, unless value_only is set, a packing
    achieving it.  Tree k of the packing holds the vertices whose granted
    stripe set contains k: the root holds all K stripes and every vertex
    passes on, per child, the smallest slice of its own set sized by the
    knapsack allocation.  Slices may overlap across children; each grant
    of a stripe to a child consumes one capacity unit either way.
    """
    values = stripe_values(inst)
    count = inst.num_trees
    best = values[inst.root][count - 1]
    if value_only:
        return best, None
    children, _ = _rooted(inst)
    caps = inst.capacities
    parent_maps: list[dict[int, int]] = [{} for _ in range(count)]
    stack: list[tuple[int, tuple[int, ...]]] = [(inst.root, tuple(range(count)))]
    while stack:
        u, stripes = stack.pop()
        kids = children[u]
        if not kids or not stripes:
            continue
        _, allocation = solve_mckp(len(stripes), caps[u], [values[w] for w in kids])
        for w, level in zip(kids, allocation):
            if level == 0:
                continue
            granted = stripes[:level]
            for s in granted:
                parent_maps[s][w] = u
            stack.append((w, granted))
    packing = Packing(tuple(RootedTree(inst.root, pm) for pm in parent_maps))
    return best, packing
