"""Loop-free undirected graphs on vertices ``0..n-1``.

Adjacency is stored as one integer bitmask per vertex, so comparing two
neighborhoods is a single integer comparison.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

from .errors import InputError, ParseError


def bits(mask: int) -> Iterator[int]:
    """Yield the positions of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class SimpleGraph:
    """Immutable simple graph. ``rows[v]`` is the neighbor bitmask of ``v``."""

    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0:
            raise InputError(f"vertex count must be nonnegative, got {self.n}")
        if len(self.rows) != self.n:
            raise InputError("need exactly one adjacency row per vertex")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.rows):
            if row & ~full:
                raise InputError(f"row {v} references a vertex outside [0, {self.n})")
            if row >> v & 1:
                raise InputError(f"self-loop at vertex {v}")
            for u in bits(row):
                if not self.rows[u] >> v & 1:
                    raise InputError(f"asymmetric adjacency between {v} and {u}")

    @classmethod
    def _make(cls, n: int, rows: tuple[int, ...]) -> "SimpleGraph":
        """Construct without validation; callers guarantee a valid adjacency."""
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "rows", rows)
        return g

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Iterable[int]]) -> "SimpleGraph":
        rows = [0] * n
        for edge in edges:
            u, v = edge
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge {u}-{v} has an endpoint outside [0, {n})")
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def complete(cls, n: int) -> "SimpleGraph":
        full = (1 << n) - 1
        return cls(n, tuple(full & ~(1 << v) for v in range(n)))

    @classmethod
    def empty(cls, n: int) -> "SimpleGraph":
        return cls(n, (0,) * n)

    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.rows) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edges as sorted pairs ``(u, v)`` with ``u < v``, in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in bits(self.rows[u]) if u < v]

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self.rows[u] >> v & 1)

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self.rows[v].bit_count()

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise InputError(f"vertex {v} out of range for a graph on {self.n} vertices")

    def relabel(self, perm: Iterable[int]) -> "SimpleGraph":
        """Return the graph in which old vertex ``v`` becomes ``perm[v]``."""
        perm = list(perm)
        if sorted(perm) != list(range(self.n)):
            raise InputError("relabeling must be a permutation of the vertices")
        return SimpleGraph.from_edges(self.n, ((perm[u], perm[v]) for u, v in self.edges()))

    def induced(self, vertices: Iterable[int]) -> "SimpleGraph":
        keep = list(vertices)
        index = {v: i for i, v in enumerate(keep)}
        return SimpleGraph.from_edges(
            len(keep),
            ((index[u], index[v]) for u, v in self.edges() if u in index and v in index),
        )

    def complement(self) -> "SimpleGraph":
        full = (1 << self.n) - 1
        return SimpleGraph(self.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(self.rows)))

    def to_json(self) -> str:
        return json.dumps({"n": self.n, "edges": [list(e) for e in self.edges()]})

    @classmethod
    def from_json(cls, text: str | dict) -> "SimpleGraph":
        data = json.loads(text) if isinstance(text, str) else text
        try:
            n = int(data["n"])
            edges = [tuple(e) for e in data["edges"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"graph JSON needs 'n' and 'edges': {exc}") from exc
        return cls.from_edges(n, edges)

    def to_dot(self, name: str = "G") -> str:
        lines = [f"graph {name} {{"]
        lines += [f"  {v};" for v in range(self.n)]
        lines += [f"  {u} -- {v};" for u, v in self.edges()]
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_edge_list(self) -> str:
        """Plain text: first line ``n``, then one ``u v`` pair per line."""
        return "\n".join([str(self.n)] + [f"{u} {v}" for u, v in self.edges()]) + "\n"

    @classmethod
    def from_edge_list(cls, text: str) -> "SimpleGraph":
        lines = [ln.split("#")[0].strip() for ln in text.splitlines()]
        lines = [ln for ln in lines if ln]
        if not lines:
            raise ParseError("empty edge list", 0)
        try:
            n = int(lines[0])
            edges = [tuple(int(tok) for tok in ln.split()) for ln in lines[1:]]
        except ValueError as exc:
            raise ParseError(f"edge list must contain integers: {exc}") from exc
        for e in edges:
            if len(e) != 2:
                raise ParseError(f"edge line needs two vertices, got {e}")
        return cls.from_edges(n, edges)


def neighborhood(g: SimpleGraph, v: int, closed: bool = False) -> frozenset[int]:
    """Open neighborhood of ``v``, or the closed one (``v`` itself included)."""
    g._check_vertex(v)
    row = g.rows[v] | (1 << v) if closed else g.rows[v]
    return frozenset(bits(row))


def components(g: SimpleGraph) -> list[int]:
    """Connected components as vertex bitmasks, ordered by least vertex."""
    seen = 0
    out = []
    for start in range(g.n):
        if seen >> start & 1:
            continue
        comp = frontier = 1 << start
        while frontier:
            reach = 0
            for v in bits(frontier):
                reach |= g.rows[v]
            frontier = reach & ~comp
            comp |= frontier
        seen |= comp
        out.append(comp)
    return out


def is_connected(g: SimpleGraph) -> bool:
    if g.n == 0:
        raise InputError("connectivity of the graph on zero vertices is undefined")
    return len(components(g)) == 1


def all_labeled_graphs(n: int) -> Iterator[SimpleGraph]:
    """Every labeled simple graph on ``n`` vertices (``2**(n*(n-1)/2)`` of them)."""
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        rows = [0] * n
        for idx in bits(mask):
            u, v = pairs[idx]
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        yield SimpleGraph(n, tuple(rows))
