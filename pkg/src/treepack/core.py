"""Problem model: instances, rooted trees, packings, verification, JSON I/O.

An instance is an undirected connected graph with a designated root, a
per-vertex child budget (the capacity), and a tree count K.  A packing is
an ordered family of K trees, each rooted at the instance root.  It is
feasible when, for every vertex, the number of children it has summed
across all K trees stays within its capacity.  The objective of a packing
is the total number of vertex occurrences: a vertex contained in j of the
K trees contributes j.
"""

from __future__ import annotations

import json
from collections import Counter, deque
from dataclasses import asdict, dataclass
from functools import cached_property
from typing import IO, Any, Mapping

KIND_GENERAL = "general"
KIND_COMPLETE = "complete"
KIND_TREE = "tree"
KINDS = (KIND_GENERAL, KIND_COMPLETE, KIND_TREE)


def _as_int(value: Any, name: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValueError(f"{name}: expected an integer, got {value!r}")
    return value


@dataclass(frozen=True)
class Instance:
    """Immutable problem instance.

    Attributes:
        kind: "general", "complete" or "tree".  Complete instances carry no
            explicit edge list; every pair of distinct vertices is adjacent.
        n: number of vertices, with ids 0..n-1.
        capacities: per-vertex child budget, shared across all trees.
        num_trees: how many rooted trees a packing must contain (K in the
            JSON format).  Must satisfy 1 <= K <= n.
        root: the common root of all trees (default 0).
        edges: undirected edges as (u, v) pairs; required unless complete.

    Construction validates everything and raises ValueError naming the
    offending field, so a constructed instance always satisfies its
    invariants (connected graph, tree kinds acyclic, capacities >= 0).
    """

    kind: str
    n: int
    capacities: tuple[int, ...]
    num_trees: int
    root: int = 0
    edges: tuple[tuple[int, int], ...] | None = None

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ValueError(f"kind: expected one of {KINDS}, got {self.kind!r}")
        n = _as_int(self.n, "n")
        if n <= 0:
            raise ValueError(f"n: must be positive, got {n}")
        root = _as_int(self.root, "root")
        if not 0 <= root < n:
            raise ValueError(f"root: {root} outside [0, {n})")
        caps = tuple(_as_int(c, "capacities") for c in self.capacities)
        if len(caps) != n:
            raise ValueError(f"capacities: expected {n} entries, got {len(caps)}")
        for v, c in enumerate(caps):
            if c < 0:
                raise ValueError(f"capacities: negative capacity {c} at vertex {v}")
        object.__setattr__(self, "capacities", caps)
        k = _as_int(self.num_trees, "K")
        if not 1 <= k <= n:
            raise ValueError(f"K: out of range, need 1 <= K <= n={n}, got {k}")

        if self.kind == KIND_COMPLETE:
            if self.edges is not None:
                raise ValueError("edges: must be omitted for complete instances")
            return
        if self.edges is None:
            raise ValueError(f"edges: required for kind={self.kind!r}")
        seen: set[tuple[int, int]] = set()
        norm: list[tuple[int, int]] = []
        for e in self.edges:
            try:
                u, v = e
            except (TypeError, ValueError):
                raise ValueError(f"edges: each edge is a (u, v) pair, got {e!r}") from None
            u = _as_int(u, "edges")
            v = _as_int(v, "edges")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edges: vertex out of range in ({u}, {v})")
            if u == v:
                raise ValueError(f"edges: self-loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise ValueError(f"edges: duplicate edge {key}")
            seen.add(key)
            norm.append(key)
        object.__setattr__(self, "edges", tuple(norm))
        if self.kind == KIND_TREE and len(norm) != n - 1:
            raise ValueError(
                f"edges: {len(norm)} edges on {n} vertices, not a tree"
            )
        if not self._connected():
            if self.kind == KIND_TREE:
                raise ValueError("edges: graph is disconnected, not a tree")
            raise ValueError("edges: graph is not connected")

    def _connected(self) -> bool:
        reached = {0}
        queue = deque([0])
        while queue:
            u = queue.popleft()
            for w in self._adjacency[u]:
                if w not in reached:
                    reached.add(w)
                    queue.append(w)
        return len(reached) == self.n

    @cached_property
    def _adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges or ():
            adj[u].append(v)
            adj[v].append(u)
        for neighbors in adj:
            neighbors.sort()
        return adj

    @cached_property
    def _edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.edges or ())

    def neighbors(self, v: int) -> list[int]:
        """Neighbors of v in ascending order (materialized for complete kinds)."""
        if self.kind == KIND_COMPLETE:
            return [u for u in range(self.n) if u != v]
        return self._adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        if not (0 <= u < self.n and 0 <= v < self.n) or u == v:
            return False
        if self.kind == KIND_COMPLETE:
            return True
        return ((u, v) if u < v else (v, u)) in self._edge_set


@dataclass(frozen=True)
class RootedTree:
    """One rooted tree, stored as a child -> parent map (root has no entry).

    The map fixes the tree completely: vertex set {root} plus the map keys,
    edges (parent[v], v).  An empty map is the null tree, just the root.
    Trees are treated as immutable after construction.

    The constructor does not check connectivity or edge membership; that is
    verify_packing's job, so damaged packings read from files can still be
    represented and reported on instead of failing to load.
    """

    root: int
    parent: Mapping[int, int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "parent", dict(self.parent))

    @classmethod
    def null(cls, root: int) -> "RootedTree":
        return cls(root, {})

    @property
    def is_null(self) -> bool:
        return not self.parent

    @property
    def vertices(self) -> set[int]:
        verts = set(self.parent)
        verts.update(self.parent.values())
        verts.add(self.root)
        return verts

    def child_counts(self) -> Counter:
        return Counter(self.parent.values())

    def edges(self) -> list[tuple[int, int]]:
        """(parent, child) pairs, root outward, children in ascending order."""
        children: dict[int, list[int]] = {}
        for c, p in self.parent.items():
            children.setdefault(p, []).append(c)
        for kids in children.values():
            kids.sort()
        out: list[tuple[int, int]] = []
        seen = {self.root}
        queue = deque([self.root])
        while queue:
            u = queue.popleft()
            for c in children.get(u, ()):
                out.append((u, c))
                seen.add(c)
                queue.append(c)
        if len(out) < len(self.parent):
            # Remnants not reachable from the root (invalid trees), kept so
            # that saving and reloading loses nothing.
            rest = [(p, c) for c, p in self.parent.items() if c not in seen]
            out.extend(sorted(rest, key=lambda e: e[1]))
        return out


@dataclass(frozen=True)
class Packing:
    """An ordered family of rooted trees, one per stripe."""

    trees: tuple[RootedTree, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "trees", tuple(self.trees))


def objective(packing: Packing) -> int:
    """Total vertex occurrences: a vertex inside j trees counts j times."""
    return sum(len(tree.vertices) for tree in packing.trees)


@dataclass(frozen=True)
class Violation:
    """One verification failure; tree/vertex are None when not applicable."""

    tree: int | None
    vertex: int | None
    reason: str


@dataclass
class VerificationReport:
    valid: bool
    violations: list[Violation]

    def to_dict(self) -> dict:
        return {
            "valid": self.valid,
            "violations": [asdict(v) for v in self.violations],
        }


def verify_packing(inst: Instance, packing: Packing) -> VerificationReport:
    """Check a packing against its instance.

    Per tree: rooted at the instance root, every edge present in the
    instance graph, every vertex reaching the root through the parent chain
    (no cycles, no orphans).  Across trees: per-vertex child totals within
    capacity.  Failures are collected and reported, never raised; only a
    tree-count mismatch is an error.
    """
    trees = packing.trees
    if len(trees) != inst.num_trees:
        raise ValueError(
            f"packing has {len(trees)} trees, instance needs K={inst.num_trees}"
        )
    violations: list[Violation] = []
    for ti, tree in enumerate(trees):
        if tree.root != inst.root:
            violations.append(
                Violation(ti, tree.root, f"tree rooted at {tree.root}, instance root is {inst.root}")
            )
            continue
        if tree.root in tree.parent:
            violations.append(Violation(ti, tree.root, "root must not have a parent"))
        bad_ids = set()
        for child in sorted(tree.parent):
            par = tree.parent[child]
            if not (0 <= child < inst.n and 0 <= par < inst.n):
                violations.append(
                    Violation(ti, child, f"edge ({par}, {child}) uses a vertex outside [0, {inst.n})")
                )
                bad_ids.add(child)
            elif not inst.has_edge(par, child):
                violations.append(
                    Violation(ti, child, f"edge ({par}, {child}) not in the instance graph")
                )
        status: dict[int, bool] = {tree.root: True}
        for v in sorted(tree.vertices):
            if v in status or v in bad_ids:
                continue
            chain: list[int] = []
            chain_set: set[int] = set()
            x = v
            while True:
                if x in status:
                    ok = status[x]
                    break
                if x in chain_set:
                    ok = False  # parent cycle
                    break
                chain.append(x)
                chain_set.add(x)
                if x not in tree.parent:
                    ok = False  # orphan that is not the root
                    break
                x = tree.parent[x]
            for y in chain:
                status[y] = ok
                if not ok:
                    violations.append(Violation(ti, y, "not connected to the root"))
    totals: Counter = Counter()
    for tree in trees:
        for par in tree.parent.values():
            totals[par] += 1
    for v in sorted(totals):
        if 0 <= v < inst.n and totals[v] > inst.capacities[v]:
            violations.append(
                Violation(
                    None,
                    v,
                    f"capacity exceeded: {totals[v]} children across trees, capacity {inst.capacities[v]}",
                )
            )
    return VerificationReport(not violations, violations)


def instance_from_dict(data: Any) -> Instance:
    if not isinstance(data, dict):
        raise ValueError("instance: expected a JSON object")
    missing = [key for key in ("kind", "n", "capacities", "K") if key not in data]
    if missing:
        raise ValueError(f"instance: missing field(s) {', '.join(missing)}")
    kind = data["kind"]
    if not isinstance(kind, str):
        raise ValueError(f"kind: expected a string, got {kind!r}")
    capacities = data["capacities"]
    if not isinstance(capacities, list):
        raise ValueError("capacities: expected a list")
    edges_data = data.get("edges")
    edges: tuple[tuple[int, int], ...] | None = None
    if edges_data is not None:
        if not isinstance(edges_data, list):
            raise ValueError("edges: expected a list")
        pairs = []
        for e in edges_data:
            if not isinstance(e, list) or len(e) != 2:
                raise ValueError(f"edges: each edge is a [u, v] pair, got {e!r}")
            pairs.append((e[0], e[1]))
        edges = tuple(pairs)
    return Instance(
        kind=kind.lower(),
        n=data["n"],
        capacities=tuple(capacities),
        num_trees=data["K"],
        root=data.get("root", 0),
        edges=edges,
    )


def instance_to_dict(inst: Instance) -> dict:
    data: dict[str, Any] = {
        "kind": inst.kind,
        "n": inst.n,
        "root": inst.root,
        "capacities": list(inst.capacities),
        "K": inst.num_trees,
    }
    if inst.edges is not None:
        data["edges"] = [list(e) for e in inst.edges]
    return data


def load_instance(source: IO) -> Instance:
    """Parse an instance JSON document from a readable stream."""
    return instance_from_dict(json.load(source))


def _dump_json(data: dict, sink: IO) -> None:
    text = json.dumps(data)
    try:
        sink.write(text)
    except TypeError:
        sink.write(text.encode("utf-8"))


def save_instance(inst: Instance, sink: IO) -> None:
    _dump_json(instance_to_dict(inst), sink)


def packing_from_dict(data: Any, root: int) -> Packing:
    if not isinstance(data, dict) or "trees" not in data:
        raise ValueError("packing: missing field trees")
    trees_data = data["trees"]
    if not isinstance(trees_data, list):
        raise ValueError("trees: expected a list")
    trees = []
    for i, td in enumerate(trees_data):
        if not isinstance(td, dict) or "edges" not in td:
            raise ValueError(f"trees[{i}]: missing field edges")
        parent: dict[int, int] = {}
        for e in td["edges"]:
            if not isinstance(e, list) or len(e) != 2:
                raise ValueError(f"trees[{i}].edges: each edge is a [parent, child] pair, got {e!r}")
            par = _as_int(e[0], f"trees[{i}].edges")
            child = _as_int(e[1], f"trees[{i}].edges")
            if child in parent:
                raise ValueError(f"trees[{i}]: vertex {child} has two parents")
            parent[child] = par
        trees.append(RootedTree(root, parent))
    return Packing(tuple(trees))


def packing_to_dict(packing: Packing) -> dict:
    return {
        "trees": [{"edges": [list(e) for e in tree.edges()]} for tree in packing.trees],
        "objective": objective(packing),
    }


def load_packing(source: IO, inst: Instance) -> Packing:
    """Parse a packing JSON document; trees are rooted at the instance root."""
    return packing_from_dict(json.load(source), inst.root)


def save_packing(packing: Packing, sink: IO) -> None:
    """Write the packing JSON document; loading it back restores the parent maps."""
    _dump_json(packing_to_dict(packing), sink)
