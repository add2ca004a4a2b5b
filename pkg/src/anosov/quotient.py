"""Weighted quotient graphs and their deconstructions.

A :class:`WeightedGraph` may carry loops.  The quotient of a simple graph has
one vertex per twin class, weighted by the class size, with a loop exactly
when the class is complete and has at least two vertices.  Deconstruction
inverts this: each vertex becomes a block of ``weight`` vertices, complete if
looped and edgeless otherwise, and every quotient edge becomes a complete
bipartite join between blocks.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable

from .canon import DEFAULT_CUTOFF, colored_lexmin
from .equivalence import ClassKind, decompose
from .errors import InputError, ParseError
from .graph import SimpleGraph, bits


@dataclass(frozen=True)
class WeightedGraph:
    """``rows[i]`` is the neighbor bitmask of ``i``; bit ``i`` set means a loop."""

    k: int
    rows: tuple[int, ...]
    weights: tuple[int, ...]

    def __post_init__(self):
        if len(self.rows) != self.k or len(self.weights) != self.k:
            raise InputError("need one row and one weight per vertex")
        full = (1 << self.k) - 1
        for i, row in enumerate(self.rows):
            if row & ~full:
                raise InputError(f"row {i} references a vertex outside [0, {self.k})")
            for j in bits(row):
                if not self.rows[j] >> i & 1:
                    raise InputError(f"asymmetric adjacency between {i} and {j}")

    @classmethod
    def from_edges(
        cls, weights: Iterable[int], edges: Iterable[Iterable[int]]
    ) -> "WeightedGraph":
        weights = tuple(weights)
        k = len(weights)
        rows = [0] * k
        for edge in edges:
            i, j = edge
            if not (0 <= i < k and 0 <= j < k):
                raise InputError(f"edge {i}-{j} has an endpoint outside [0, {k})")
            rows[i] |= 1 << j
            rows[j] |= 1 << i
        return cls(k, tuple(rows), weights)

    def has_loop(self, i: int) -> bool:
        return bool(self.rows[i] >> i & 1)

    def loops(self) -> tuple[bool, ...]:
        return tuple(self.has_loop(i) for i in range(self.k))

    def edges(self) -> list[tuple[int, int]]:
        """All edges with ``i <= j``; loops appear as ``(i, i)``."""
        return [(i, j) for i in range(self.k) for j in bits(self.rows[i]) if i <= j]

    @property
    def total_weight(self) -> int:
        return sum(self.weights)

    def open_neighborhood(self, i: int) -> int:
        return self.rows[i] & ~(1 << i)

    def is_connected(self) -> bool:
        """Reachability ignoring loops; the graph on zero vertices counts as disconnected."""
        if self.k == 0:
            return False
        comp = frontier = 1
        while frontier:
            reach = 0
            for v in bits(frontier):
                reach |= self.rows[v]
            frontier = reach & ~comp
            comp |= frontier
        return comp == (1 << self.k) - 1

    def relabel(self, perm: Iterable[int]) -> "WeightedGraph":
        """Old vertex ``i`` becomes ``perm[i]``."""
        perm = list(perm)
        weights = [0] * self.k
        for i, p in enumerate(perm):
            weights[p] = self.weights[i]
        return WeightedGraph.from_edges(weights, ((perm[i], perm[j]) for i, j in self.edges()))

    def to_dict(self) -> dict:
        return {"k": self.k, "weights": list(self.weights), "edges": [list(e) for e in self.edges()]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str | dict) -> "WeightedGraph":
        data = json.loads(text) if isinstance(text, str) else text
        try:
            weights = [int(w) for w in data["weights"]]
            edges = [tuple(e) for e in data["edges"]]
            k = int(data.get("k", len(weights)))
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"weighted graph JSON needs 'weights' and 'edges': {exc}") from exc
        if k != len(weights):
            raise ParseError(f"'k' = {k} but {len(weights)} weights given")
        return cls.from_edges(weights, edges)

    def to_dot(self, name: str = "Q") -> str:
        lines = [f"graph {name} {{"]
        lines += [f'  {i} [label="{w}"];' for i, w in enumerate(self.weights)]
        lines += [f"  {i} -- {j};" for i, j in self.edges()]
        lines.append("}")
        return "\n".join(lines) + "\n"


@dataclass(frozen=True, order=True)
class WeightedCode:
    """Isomorphism key of a weighted graph: sorted weights, then the lex-min matrix."""

    k: int
    weights: tuple[int, ...]
    bits: int

    def graph(self) -> WeightedGraph:
        k = self.k
        rows = [0] * k
        pos = k * (k + 1) // 2 - 1
        for i in range(k):
            for j in range(i, k):
                if self.bits >> pos & 1:
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
                pos -= 1
        return WeightedGraph(k, tuple(rows), self.weights)

    def __str__(self) -> str:
        return f"w:{self.k}:{','.join(map(str, self.weights))}:{self.bits:x}"


def weighted_canonical_code(w: WeightedGraph, cutoff: int = DEFAULT_CUTOFF) -> WeightedCode:
    weights, value = colored_lexmin(w.rows, w.weights, cutoff)
    return WeightedCode(w.k, weights, value)


def quotient(g: SimpleGraph) -> WeightedGraph:
    """The quotient of ``g`` by the twin relation, vertices in decomposition order."""
    dec = decompose(g)
    reps = [cls[0] for cls in dec.classes]
    k = len(reps)
    rows = [0] * k
    for i, ri in enumerate(reps):
        for j, rj in enumerate(reps):
            if i != j and g.rows[ri] >> rj & 1:
                rows[i] |= 1 << j
        if dec.kinds[i] is ClassKind.COMPLETE:
            rows[i] |= 1 << i
    return WeightedGraph(k, tuple(rows), tuple(len(c) for c in dec.classes))


def blocks(w: WeightedGraph) -> list[range]:
    """Vertex ranges of the deconstruction's blocks, in vertex order."""
    out = []
    start = 0
    for weight in w.weights:
        out.append(range(start, start + weight))
        start += weight
    return out


def deconstruct(w: WeightedGraph) -> SimpleGraph:
    for i, weight in enumerate(w.weights):
        if weight < 1:
            raise InputError(f"vertex {i} has weight {weight}; weights must be positive")
    spans = blocks(w)
    masks = [((1 << len(r)) - 1) << r.start for r in spans]
    n = w.total_weight
    rows = [0] * n
    for i, span in enumerate(spans):
        row = 0
        for j in bits(w.rows[i]):
            row |= masks[j]
        for v in span:
            rows[v] = row & ~(1 << v)
    return SimpleGraph(n, tuple(rows))


def check_anosov_criteria(w: WeightedGraph) -> bool:
    """Connected, every weight at least 2, and no loop on a weight-2 vertex.

    A lone loop-free vertex is connected but deconstructs to an edgeless
    graph, so it is rejected as well.
    """
    if not w.is_connected():
        return False
    if w.k == 1 and not w.has_loop(0):
        return False
    return all(
        weight >= 2 and not (weight == 2 and w.has_loop(i)) for i, weight in enumerate(w.weights)
    )


def distinct_neighborhoods(w: WeightedGraph) -> bool:
    """Looped pairs differ in closed neighborhood, loop-free pairs in open neighborhood."""
    for i in range(w.k):
        for j in range(i + 1, w.k):
            li, lj = w.has_loop(i), w.has_loop(j)
            if li and lj and w.rows[i] | (1 << i) == w.rows[j] | (1 << j):
                return False
            if not li and not lj and w.open_neighborhood(i) == w.open_neighborhood(j):
                return False
    return True


def distinct_rows(w: WeightedGraph) -> bool:
    """No two rows of the adjacency matrix (loop flags on the diagonal) coincide."""
    return len(set(w.rows)) == w.k


def check_brick_conditions(w: WeightedGraph) -> bool:
    """Sufficient conditions for ``w`` to be the quotient of an Anosov graph."""
    by_rows = distinct_rows(w)
    by_neighborhoods = distinct_neighborhoods(w)
    if by_rows != by_neighborhoods:
        raise AssertionError(f"distinctness formulations disagree on {w.to_json()}")
    return by_rows and check_anosov_criteria(w)


def weighted_isomorphic(a: WeightedGraph, b: WeightedGraph) -> bool:
    return a.k == b.k and weighted_canonical_code(a) == weighted_canonical_code(b)
