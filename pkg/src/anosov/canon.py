"""Canonical codes for graphs, loop graphs and vertex-colored loop graphs.

Two canonicalizers are provided.

``lexmin``
    The lexicographically smallest upper-triangle bitstring of the adjacency
    matrix over every vertex permutation.  Exhaustive, so it is limited by a
    cutoff on the number of vertices.

``ir``
    Individualization-refinement search.  The leaves of an isomorphism-
    invariant search tree are relabelings of the graph; the code is the
    smallest leaf bitstring.  Branching skips a vertex when an already-tried
    vertex of the same cell is its twin, since swapping twins is an
    automorphism that fixes the current partition.  No vertex-count cutoff.

Codes from the two schemes are never equal to one another, so mixing them
cannot produce a false isomorphism.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product
from math import factorial

import numpy as np

from .errors import CapabilityError
from .graph import SimpleGraph, bits

DEFAULT_CUTOFF = 10
_TABLE_LIMIT = 9


@dataclass(frozen=True, order=True)
class CanonicalCode:
    """Isomorphism-class key of a simple graph.

    ``bits`` holds the upper triangle of the relabeled adjacency matrix in
    row-major order, pair ``(0, 1)`` being the most significant bit.
    """

    scheme: str
    n: int
    bits: int

    def graph(self) -> SimpleGraph:
        """The canonically relabeled graph this code describes."""
        n = self.n
        npairs = n * (n - 1) // 2
        rows = [0] * n
        pos = npairs - 1
        for i in range(n):
            for j in range(i + 1, n):
                if self.bits >> pos & 1:
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
                pos -= 1
        return SimpleGraph(n, tuple(rows))

    def to_bytes(self) -> bytes:
        npairs = self.n * (self.n - 1) // 2
        body = self.bits.to_bytes((npairs + 7) // 8, "big")
        return self.scheme.encode() + b":" + self.n.to_bytes(2, "big") + body

    def hex(self) -> str:
        return self.to_bytes().hex()

    def __str__(self) -> str:
        return f"{self.scheme}:{self.n}:{self.bits:x}"


# --------------------------------------------------------------------------
# exhaustive lexicographic minimization
# --------------------------------------------------------------------------


def _pair_positions(n: int, diag: bool) -> tuple[np.ndarray, np.ndarray]:
    first = 0 if diag else 1
    pairs = [(i, j) for i in range(n) for j in range(i + first, n)]
    if not pairs:
        return np.zeros(0, dtype=np.intp), np.zeros(0, dtype=np.intp)
    i, j = zip(*pairs)
    return np.array(i, dtype=np.intp), np.array(j, dtype=np.intp)


@lru_cache(maxsize=None)
def _perm_table(n: int) -> np.ndarray:
    return np.array(list(permutations(range(n))), dtype=np.intp).reshape(-1, n)


@lru_cache(maxsize=None)
def _gather_index(n: int, diag: bool) -> np.ndarray:
    """Flat adjacency indices read by each permutation, one row per permutation."""
    perms = _perm_table(n)
    i, j = _pair_positions(n, diag)
    return perms[:, i] * n + perms[:, j]


def _place_values(count: int) -> np.ndarray:
    return (np.int64(1) << np.arange(count - 1, -1, -1, dtype=np.int64)).astype(np.int64)


def _matrix(rows: tuple[int, ...] | list[int], n: int) -> np.ndarray:
    mat = np.zeros(n * n, dtype=np.int64)
    for v, row in enumerate(rows):
        for u in bits(row):
            mat[v * n + u] = 1
    return mat


def _perm_chunks(n: int):
    if n <= _TABLE_LIMIT:
        yield _perm_table(n)
        return
    sub = _perm_table(n - 1)
    for first in range(n):
        others = np.array([v for v in range(n) if v != first], dtype=np.intp)
        chunk = np.empty((sub.shape[0], n), dtype=np.intp)
        chunk[:, 0] = first
        chunk[:, 1:] = others[sub]
        yield chunk


def _lexmin(rows, n: int, diag: bool, perms: np.ndarray | None = None) -> int:
    """Smallest bitstring over the given permutations (all of S_n by default)."""
    if n == 0:
        return 0
    mat = _matrix(rows, n)
    npos = n * (n + 1) // 2 if diag else n * (n - 1) // 2
    if npos == 0:
        return 0
    place = _place_values(npos)
    if perms is None and n <= _TABLE_LIMIT:
        return int((mat[_gather_index(n, diag)] @ place).min())
    i, j = _pair_positions(n, diag)
    chunks = [perms] if perms is not None else _perm_chunks(n)
    best = None
    for chunk in chunks:
        value = int((mat[chunk[:, i] * n + chunk[:, j]] @ place).min())
        best = value if best is None else min(best, value)
    return best


def lexmin_code(g: SimpleGraph, cutoff: int = DEFAULT_CUTOFF) -> CanonicalCode:
    if g.n > cutoff:
        raise CapabilityError(
            f"exhaustive canonical form limited to n <= {cutoff}, got n = {g.n}; "
            "enable the refinement backend"
        )
    return CanonicalCode("lexmin", g.n, _lexmin(g.rows, g.n, diag=False))


def matrix_lexmin(rows: tuple[int, ...], t: int, cutoff: int = DEFAULT_CUTOFF) -> int:
    """Lex-min of the upper triangle including the diagonal (loop graphs)."""
    if t > cutoff:
        raise CapabilityError(f"matrix canonical form limited to t <= {cutoff}, got {t}")
    return _lexmin(rows, t, diag=True)


def colored_lexmin(
    rows: tuple[int, ...], colors: tuple[int, ...], cutoff: int = DEFAULT_CUTOFF
) -> tuple[tuple[int, ...], int]:
    """Lex-min of ``(colors in new order, upper triangle with diagonal)``.

    The color sequence is minimized first, so only permutations that sort the
    colors ascending compete; within equal colors every order is tried.
    """
    k = len(colors)
    if k > cutoff:
        raise CapabilityError(f"weighted canonical form limited to k <= {cutoff}, got {k}")
    if k == 0:
        return (), 0
    groups: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        groups.setdefault(c, []).append(v)
    keys = sorted(groups)
    blocks = [list(permutations(groups[c])) for c in keys]
    count = 1
    for block in blocks:
        count *= len(block)
    if count == factorial(k) and k <= _TABLE_LIMIT:
        value = _lexmin(rows, k, diag=True)
    else:
        perms = np.array([sum(choice, ()) for choice in product(*blocks)], dtype=np.intp)
        value = _lexmin(rows, k, diag=True, perms=perms)
    return tuple(sorted(colors)), value


# --------------------------------------------------------------------------
# individualization-refinement
# --------------------------------------------------------------------------


def _refine(cells: list[list[int]], rows) -> list[list[int]]:
    """Split cells by neighbor counts into every cell until the partition is equitable."""
    while True:
        masks = [sum(1 << v for v in cell) for cell in cells]
        out = []
        split = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            sig = {v: tuple((rows[v] & m).bit_count() for m in masks) for v in cell}
            keys = sorted(set(sig.values()))
            if len(keys) > 1:
                split = True
                out.extend([v for v in cell if sig[v] == key] for key in keys)
            else:
                out.append(cell)
        cells = out
        if not split:
            return cells


def _leaf_bits(rows, order: list[int], diag: bool) -> int:
    value = 0
    n = len(order)
    for i in range(n):
        row = rows[order[i]]
        for j in range(i if diag else i + 1, n):
            value = value << 1 | (row >> order[j] & 1)
    return value


def ir_bits(rows, n: int, colors=None, diag: bool = False) -> int:
    """Smallest leaf bitstring of the individualization-refinement tree.

    ``colors`` (optional) gives an initial vertex coloring; vertices are
    grouped by color in ascending color order before refinement.  With
    ``diag`` the loop bit ``rows[v] >> v`` takes part in the bitstring.
    """
    if n == 0:
        return 0
    if colors is None:
        cells = [list(range(n))]
    else:
        cells = [[v for v in range(n) if colors[v] == c] for c in sorted(set(colors))]
    best = None

    def twins(u: int, v: int) -> bool:
        if diag and (rows[u] >> u & 1) != (rows[v] >> v & 1):
            return False
        cut = ~((1 << u) | (1 << v))
        return rows[u] & cut == rows[v] & cut

    def search(cells: list[list[int]]) -> None:
        nonlocal best
        cells = _refine(cells, rows)
        for index, cell in enumerate(cells):
            if len(cell) > 1:
                break
        else:
            value = _leaf_bits(rows, [cell[0] for cell in cells], diag)
            if best is None or value < best:
                best = value
            return
        tried: list[int] = []
        for v in cell:
            if any(twins(u, v) for u in tried):
                continue
            tried.append(v)
            rest = [u for u in cell if u != v]
            search(cells[:index] + [[v], rest] + cells[index + 1 :])

    search(cells)
    return best


def ir_code(g: SimpleGraph) -> CanonicalCode:
    return CanonicalCode("ir", g.n, ir_bits(g.rows, g.n))


def canonical_code(
    g: SimpleGraph, refine: bool = False, cutoff: int = DEFAULT_CUTOFF
) -> CanonicalCode:
    """Canonical code of ``g``.

    By default the exhaustive lex-min over all of S_n, which raises
    ``CapabilityError`` above ``cutoff`` vertices.  ``refine=True`` selects the
    individualization-refinement backend, which has no cutoff.
    """
    if refine:
        return ir_code(g)
    return lexmin_code(g, cutoff)
