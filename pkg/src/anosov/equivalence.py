"""The twin relation on vertices, graph types, and the Anosov predicate.

Two vertices are related when their open neighborhoods coincide or their
closed neighborhoods coincide.  Each class induces either an edgeless or a
complete subgraph, and the sorted class sizes form the type of the graph.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from typing import Iterable

from .errors import InputError
from .graph import SimpleGraph, bits, is_connected
from .partitions import Partition


class ClassKind(enum.Enum):
    EDGELESS = "edgeless"
    COMPLETE = "complete"


def similar(g: SimpleGraph, x: int, y: int) -> bool:
    g._check_vertex(x)
    g._check_vertex(y)
    rx, ry = g.rows[x], g.rows[y]
    return rx == ry or rx | (1 << x) == ry | (1 << y)


@dataclass(frozen=True)
class EquivalenceDecomposition:
    """Classes sorted by decreasing size, ties broken by least vertex.

    A singleton class is reported as edgeless; for size one the flag carries
    no information.
    """

    classes: tuple[tuple[int, ...], ...]
    kinds: tuple[ClassKind, ...]

    @property
    def type(self) -> Partition:
        return Partition(tuple(len(c) for c in self.classes))

    def to_dict(self) -> dict:
        return {
            "type": list(self.type.parts),
            "classes": [
                {"vertices": list(c), "kind": kind.value}
                for c, kind in zip(self.classes, self.kinds)
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def _class_masks(g: SimpleGraph) -> list[int]:
    # Two passes of dictionary grouping: open rows, then closed rows.  The
    # relation is transitive, so a vertex never lands in two classes.
    owner = list(range(g.n))
    by_open: dict[int, int] = {}
    by_closed: dict[int, int] = {}
    for v, row in enumerate(g.rows):
        if row in by_open:
            owner[v] = owner[by_open[row]]
        else:
            by_open[row] = v
        closed = row | (1 << v)
        if closed in by_closed:
            owner[v] = owner[by_closed[closed]]
        else:
            by_closed[closed] = v
    masks: dict[int, int] = {}
    for v in range(g.n):
        masks[owner[v]] = masks.get(owner[v], 0) | (1 << v)
    return list(masks.values())


def decompose(g: SimpleGraph) -> EquivalenceDecomposition:
    if g.n == 0:
        raise InputError("decomposition needs at least one vertex")
    masks = _class_masks(g)
    masks.sort(key=lambda m: (-m.bit_count(), (m & -m).bit_length()))
    classes = []
    kinds = []
    for mask in masks:
        members = tuple(bits(mask))
        classes.append(members)
        v = members[0]
        inside = len(members) > 1 and g.rows[v] & mask
        kinds.append(ClassKind.COMPLETE if inside else ClassKind.EDGELESS)
    return EquivalenceDecomposition(tuple(classes), tuple(kinds))


def graph_type(g: SimpleGraph) -> Partition:
    return Partition(tuple(sorted((m.bit_count() for m in _class_masks(g)), reverse=True)))


def min_class_size(g: SimpleGraph) -> int:
    return min(m.bit_count() for m in _class_masks(g))


def anosov_violation(g: SimpleGraph, allow_disconnected: bool = False) -> str | None:
    """Why ``g`` is not Anosov, or ``None`` when it is."""
    if g.n == 0:
        raise InputError("the Anosov predicate needs at least one vertex")
    if not allow_disconnected and not is_connected(g):
        return "graph is disconnected"
    dec = decompose(g)
    for cls, kind in zip(dec.classes, dec.kinds):
        members = "{" + ",".join(map(str, cls)) + "}"
        if len(cls) == 1:
            return f"class {members} has size 1"
        if len(cls) == 2 and kind is ClassKind.COMPLETE:
            return f"class {members} has size 2 and is complete"
    return None


def is_anosov(g: SimpleGraph, allow_disconnected: bool = False) -> bool:
    return anosov_violation(g, allow_disconnected) is None


def is_anosov_fast(g: SimpleGraph, allow_disconnected: bool = False) -> bool:
    """Same predicate as :func:`is_anosov`, skipping diagnostics (census hot path)."""
    for mask in _class_masks(g):
        size = mask.bit_count()
        if size == 1:
            return False
        if size == 2 and g.rows[(mask & -mask).bit_length() - 1] & mask:
            return False
    return allow_disconnected or is_connected(g)


def count_by_type(graphs: Iterable[SimpleGraph], lam: Partition | Iterable[int]) -> int:
    """Number of graphs in the stream whose type equals ``lam``."""
    lam = Partition.of(lam)
    count = 0
    for g in graphs:
        if g.n != lam.n:
            raise InputError(f"partition of {lam.n} does not match a graph on {g.n} vertices")
        if graph_type(g) == lam:
            count += 1
    return count
