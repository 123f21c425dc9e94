"""3-SAT gadget generation: CNF formula in, single-tree packing instance out.

The gadget wires one selector vertex per variable to the root, hangs the
two literal vertices off each selector, and makes each clause vertex
adjacent to its three literals.  Capacities let the root adopt every
selector, each selector adopt exactly one of its two literals, literals
adopt any number of clauses, and clauses adopt nothing.  A single tree
then reaches 1 + 2n + m total vertices exactly when the formula is
satisfiable, and the literals inside such a tree spell the assignment.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import IO

from .core import KIND_GENERAL, Instance, Packing, objective, verify_packing


@dataclass(frozen=True)
class SatInstance:
    """A CNF formula with exactly three literals per clause.

    Literals are signed 1-based variable indexes.  A clause may repeat a
    variable, in either polarity.
    """

    num_vars: int
    clauses: tuple[tuple[int, int, int], ...]

    def __post_init__(self) -> None:
        if not isinstance(self.num_vars, int) or self.num_vars < 1:
            raise ValueError(f"num_vars: must be a positive integer, got {self.num_vars!r}")
        clauses = tuple(tuple(cl) for cl in self.clauses)
        if not clauses:
            raise ValueError("clauses: formula has no clauses")
        for j, cl in enumerate(clauses, start=1):
            if len(cl) != 3:
                raise ValueError(f"clause {j}: needs exactly 3 literals, got {len(cl)}")
            for lit in cl:
                if not isinstance(lit, int) or lit == 0 or abs(lit) > self.num_vars:
                    raise ValueError(f"clause {j}: literal {lit!r} out of range")
        object.__setattr__(self, "clauses", clauses)

    @property
    def num_clauses(self) -> int:
        return len(self.clauses)


@dataclass(frozen=True)
class ReductionOutput:
    """Gadget instance plus its decision threshold and vertex role map."""

    instance: Instance
    gamma: int
    labels: dict[int, str]
    num_vars: int
    num_clauses: int

    def selector_vertex(self, i: int) -> int:
        return i

    def literal_vertex(self, i: int, value: bool) -> int:
        base = self.num_vars + 2 * (i - 1) + 1
        return base if value else base + 1

    def clause_vertex(self, j: int) -> int:
        return 3 * self.num_vars + j


def parse_dimacs(text: str) -> SatInstance:
    """Parse DIMACS CNF text; every clause must have exactly three literals."""
    num_vars: int | None = None
    clauses: list[tuple[int, ...]] = []
    current: list[int] = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("c") or line.startswith("%"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise ValueError(f"dimacs: bad problem line {line!r}")
            try:
                num_vars = int(parts[2])
            except ValueError:
                raise ValueError(f"dimacs: bad variable count {parts[2]!r}") from None
            continue
        for tok in line.split():
            try:
                lit = int(tok)
            except ValueError:
                raise ValueError(f"dimacs: bad token {tok!r}") from None
            if lit == 0:
                clauses.append(tuple(current))
                current = []
            else:
                current.append(lit)
    if num_vars is None:
        raise ValueError("dimacs: missing 'p cnf' problem line")
    if current:
        clauses.append(tuple(current))  # unterminated final clause tolerated
    return SatInstance(num_vars, tuple(clauses))  # type: ignore[arg-type]


def load_dimacs(source: IO) -> SatInstance:
    data = source.read()
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    return parse_dimacs(data)


def reduce_3sat(sat: SatInstance) -> ReductionOutput:
    """Build the gadget instance for a formula.

    Vertex layout: 0 is the root, 1..n the selectors, then the literal
    pairs (positive before negative, per variable), then one vertex per
    clause.  Capacities: root n, selectors 1, literals m, clauses 0.  The
    threshold is 1 + 2n + m.  A clause repeating a literal contributes the
    connecting edge once; one edge is all the connection needs.
    """
    n = sat.num_vars
    m = sat.num_clauses

    def positive(i: int) -> int:
        return n + 2 * (i - 1) + 1

    def negative(i: int) -> int:
        return n + 2 * i

    def clause(j: int) -> int:
        return 3 * n + j

    labels = {0: "root"}
    edges: list[tuple[int, int]] = []
    for i in range(1, n + 1):
        edges.append((0, i))
        edges.append((i, positive(i)))
        edges.append((i, negative(i)))
        labels[i] = f"selector_{i}"
        labels[positive(i)] = f"x{i}"
        labels[negative(i)] = f"not_x{i}"
    seen = set(edges)
    for j, cl in enumerate(sat.clauses, start=1):
        labels[clause(j)] = f"clause_{j}"
        for lit in cl:
            v = positive(lit) if lit > 0 else negative(-lit)
            key = (v, clause(j))
            if key not in seen:
                seen.add(key)
                edges.append(key)

    total = 1 + 3 * n + m
    capacities = [0] * total
    capacities[0] = n
    for i in range(1, n + 1):
        capacities[i] = 1
        capacities[positive(i)] = m
        capacities[negative(i)] = m
    instance = Instance(
        kind=KIND_GENERAL,
        n=total,
        capacities=tuple(capacities),
        num_trees=1,
        root=0,
        edges=tuple(edges),
    )
    return ReductionOutput(instance, 1 + 2 * n + m, labels, n, m)


def extract_assignment(reduction: ReductionOutput, packing: Packing) -> dict[int, bool] | None:
    """Read a satisfying assignment out of a verified packing.

    Returns None when the packing misses the threshold.  Otherwise a
    variable is True exactly when its positive literal vertex is in the
    tree.  A verified tree never holds both literals of a variable (the
    selector has a single child slot and clauses have none), so that case
    raises, as does an unverified packing.
    """
    report = verify_packing(reduction.instance, packing)
    if not report.valid:
        raise ValueError("packing does not verify against the gadget instance")
    if objective(packing) < reduction.gamma:
        return None
    members = packing.trees[0].vertices
    assignment: dict[int, bool] = {}
    for i in range(1, reduction.num_vars + 1):
        pos = reduction.literal_vertex(i, True) in members
        neg = reduction.literal_vertex(i, False) in members
        if pos and neg:
            raise ValueError(f"variable {i}: both literal vertices are in the tree")
        assignment[i] = pos
    return assignment
