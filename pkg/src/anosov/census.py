"""Isomorph-free censuses: a(n) two ways, U(n), L(n), and X(t).

Brute force
    Every isomorphism class on ``n`` vertices arises from a class on
    ``n - 1`` vertices by adding one vertex joined to some subset.  Extending
    each class rep by every subset, filtering by a predicate, and
    deduplicating survivors by canonical code therefore yields exactly the
    classes on ``n`` vertices that satisfy the predicate.

Quotient synthesis
    For each partition of ``n`` with smallest part at least 2, place its
    parts as weights on every loop graph on ``len(partition)`` vertices, keep
    the weighted graphs passing the brick conditions, deduplicate up to
    weighted isomorphism, and deconstruct.

Both methods report the refinement-scheme canonical codes of the graphs
found, so their outputs can be compared byte for byte.
"""

from __future__ import annotations

import enum
import json
import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from pathlib import Path
from typing import Callable

from .canon import CanonicalCode, ir_bits, matrix_lexmin
from .equivalence import _class_masks, is_anosov_fast
from .errors import CapabilityError, InputError
from .graph import SimpleGraph, is_connected
from .partitions import iter_partitions
from .quotient import WeightedCode, WeightedGraph, check_brick_conditions, deconstruct, weighted_canonical_code

log = logging.getLogger(__name__)

CODE_VERSION = 1
BRUTE_FORCE_MAX_N = 8
QUOTIENT_MAX_K = 6
X_EXHAUSTIVE_MAX_T = 6
X_OPT_IN_MAX_T = 7


class Method(enum.Enum):
    BRUTE_FORCE = "brute"
    QUOTIENT = "quotient"


@dataclass(frozen=True)
class CensusResult:
    n: int
    method: Method
    graphs: tuple[CanonicalCode, ...]

    @property
    def count(self) -> int:
        return len(self.graphs)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "method": self.method.value,
            "code_version": CODE_VERSION,
            "count": self.count,
            "codes": [[c.scheme, c.n, format(c.bits, "x")] for c in self.graphs],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "CensusResult":
        codes = tuple(CanonicalCode(s, n, int(b, 16)) for s, n, b in data["codes"])
        return cls(data["n"], Method(data["method"]), codes)


def _code(g: SimpleGraph) -> CanonicalCode:
    return CanonicalCode("ir", g.n, ir_bits(g.rows, g.n))


# --------------------------------------------------------------------------
# predicates used by the brute-force filter; module level so workers can pickle them
# --------------------------------------------------------------------------


def _accept_all(g: SimpleGraph) -> bool:
    return True


def _accept_anosov(g: SimpleGraph) -> bool:
    return is_anosov_fast(g)


def _accept_u(g: SimpleGraph) -> bool:
    return min(m.bit_count() for m in _class_masks(g)) >= 2


def _accept_l(g: SimpleGraph) -> bool:
    return min(m.bit_count() for m in _class_masks(g)) >= 3 and is_connected(g)


PREDICATES: dict[str, Callable[[SimpleGraph], bool]] = {
    "all": _accept_all,
    "anosov": _accept_anosov,
    "U": _accept_u,
    "L": _accept_l,
}


def _extend_and_filter(args: tuple[int, list[tuple[int, ...]], str]) -> set[CanonicalCode]:
    n, parents, predicate = args
    accept = PREDICATES[predicate]
    found = set()
    last = 1 << (n - 1)
    for rows in parents:
        for subset in range(last):
            new = list(rows)
            for u in range(n - 1):
                if subset >> u & 1:
                    new[u] |= last
            new.append(subset)
            g = SimpleGraph._make(n, tuple(new))
            if accept(g):
                found.add(_code(g))
    return found


def _run_chunks(n: int, parents: list[tuple[int, ...]], predicate: str, workers: int) -> list[CanonicalCode]:
    if workers <= 1 or len(parents) < 2:
        found = _extend_and_filter((n, parents, predicate))
    else:
        size = -(-len(parents) // (workers * 4))
        chunks = [(n, parents[i : i + size], predicate) for i in range(0, len(parents), size)]
        found = set()
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_extend_and_filter, chunks):
                found |= part
    return sorted(found)


@lru_cache(maxsize=None)
def graph_classes(n: int) -> tuple[CanonicalCode, ...]:
    """Canonical codes of every isomorphism class of simple graphs on ``n`` vertices."""
    if n < 0:
        raise InputError(f"vertex count must be nonnegative, got {n}")
    if n == 0:
        return (CanonicalCode("ir", 0, 0),)
    parents = [c.graph().rows for c in graph_classes(n - 1)]
    return tuple(_run_chunks(n, parents, "all", 1))


def brute_force_codes(n: int, predicate: str, workers: int = 1) -> list[CanonicalCode]:
    """Codes of the isomorphism classes on ``n`` vertices accepted by ``predicate``."""
    if n > BRUTE_FORCE_MAX_N:
        raise CapabilityError(f"brute-force census limited to n <= {BRUTE_FORCE_MAX_N}, got {n}")
    if n < 1:
        return []
    parents = [c.graph().rows for c in graph_classes(n - 1)]
    return _run_chunks(n, parents, predicate, workers)


# --------------------------------------------------------------------------
# loop graphs and X(t)
# --------------------------------------------------------------------------


def _matrix_rows(code: int, t: int) -> tuple[int, ...]:
    rows = [0] * t
    pos = t * (t + 1) // 2 - 1
    for i in range(t):
        for j in range(i, t):
            if code >> pos & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            pos -= 1
    return tuple(rows)


@lru_cache(maxsize=None)
def loop_graph_classes(t: int) -> tuple[tuple[int, ...], ...]:
    """One canonical row tuple per isomorphism class of loop graphs on ``t`` vertices.

    Equivalently, orbits of symmetric 0/1 matrices under simultaneous row and
    column permutation.  Sorted by canonical code.
    """
    if t == 0:
        return ((),)
    if t > X_OPT_IN_MAX_T:
        raise CapabilityError(f"loop-graph classes limited to t <= {X_OPT_IN_MAX_T}, got {t}")
    codes = set()
    last = 1 << (t - 1)
    for rows in loop_graph_classes(t - 1):
        for subset in range(1 << t):
            new = list(rows)
            for u in range(t - 1):
                if subset >> u & 1:
                    new[u] |= last
            new.append(subset)
            codes.add(matrix_lexmin(tuple(new), t))
    return tuple(_matrix_rows(c, t) for c in sorted(codes))


def compute_X(t: int, allow_large: bool = False) -> int:
    """Symmetric binary t x t matrices with pairwise distinct rows, up to relabeling."""
    if t < 1:
        raise InputError(f"matrix size must be positive, got {t}")
    limit = X_OPT_IN_MAX_T if allow_large else X_EXHAUSTIVE_MAX_T
    if t > limit:
        hint = "" if allow_large else " (t = 7 needs the opt-in flag)"
        raise CapabilityError(f"X(t) limited to t <= {limit}{hint}, got {t}")
    return sum(1 for rows in loop_graph_classes(t) if len(set(rows)) == t)


def string_to_matrix(alpha) -> list[list[int]]:
    """Row-distinct symmetric matrix built from a binary string.

    Off the diagonal, entry ``(i, j)`` copies the string at ``max(i, j)``;
    the diagonal holds the complement of the string.
    """
    alpha = [int(c) for c in alpha]
    t = len(alpha)
    if t < 1:
        raise InputError("binary string must be nonempty")
    if any(a not in (0, 1) for a in alpha):
        raise InputError("string must be binary")
    return [[1 - alpha[i] if i == j else alpha[max(i, j)] for j in range(t)] for i in range(t)]


# --------------------------------------------------------------------------
# quotient synthesis
# --------------------------------------------------------------------------


@lru_cache(maxsize=None)
def brick_skeletons(k: int) -> tuple[tuple[int, ...], ...]:
    """Loop-graph class reps on ``k`` vertices that are connected with distinct rows."""
    out = []
    for rows in loop_graph_classes(k):
        if len(set(rows)) != k:
            continue
        if WeightedGraph(k, rows, (1,) * k).is_connected():
            out.append(rows)
    return tuple(out)


def _multiset_orders(parts: tuple[int, ...]) -> list[tuple[int, ...]]:
    return sorted(set(permutations(parts)))


def synthesize_quotients(n: int, max_k: int = QUOTIENT_MAX_K) -> dict[WeightedCode, WeightedGraph]:
    """Weighted quotients of all Anosov graphs on ``n`` vertices, keyed by weighted code."""
    if n // 2 > max_k:
        raise CapabilityError(
            f"quotient synthesis needs loop graphs on up to {n // 2} vertices; limit is {max_k}"
        )
    found: dict[WeightedCode, WeightedGraph] = {}
    for lam in iter_partitions(n, min_part=2):
        k = len(lam)
        for rows in brick_skeletons(k):
            for weights in _multiset_orders(lam.parts):
                w = WeightedGraph(k, rows, weights)
                if not check_brick_conditions(w):
                    continue
                code = weighted_canonical_code(w)
                found.setdefault(code, code.graph())
    return dict(sorted(found.items()))


def quotient_codes(n: int, max_k: int = QUOTIENT_MAX_K) -> list[CanonicalCode]:
    quotients = synthesize_quotients(n, max_k)
    codes = {_code(deconstruct(w)) for w in quotients.values()}
    if len(codes) != len(quotients):
        raise AssertionError(
            f"{len(quotients)} weighted quotients deconstruct to {len(codes)} graphs on {n} vertices"
        )
    return sorted(codes)


# --------------------------------------------------------------------------
# public census entry points
# --------------------------------------------------------------------------


def _cache_file(cache_dir: str | os.PathLike, kind: str, n: int, method: Method) -> Path:
    return Path(cache_dir) / f"{kind}-n{n}-{method.value}-v{CODE_VERSION}.json"


def enumerate_anosov(
    n: int,
    method: Method | str = Method.BRUTE_FORCE,
    workers: int = 1,
    cache_dir: str | os.PathLike | None = None,
) -> CensusResult:
    """All Anosov graphs on ``n`` vertices up to isomorphism."""
    method = Method(method)
    if n < 1:
        raise InputError(f"vertex count must be positive, got {n}")
    path = _cache_file(cache_dir, "anosov", n, method) if cache_dir else None
    if path is not None and path.exists():
        log.info("census cache hit: %s", path)
        return CensusResult.from_dict(json.loads(path.read_text()))
    if method is Method.BRUTE_FORCE:
        codes = brute_force_codes(n, "anosov", workers)
    else:
        codes = quotient_codes(n)
    result = CensusResult(n, method, tuple(codes))
    if path is not None:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(json.dumps(result.to_dict()))
    return result


def count_U(n: int, workers: int = 1) -> int:
    """Classes on ``n`` vertices, connected or not, whose smallest twin class has size >= 2."""
    if n < 1:
        return 0
    return len(brute_force_codes(n, "U", workers))


def count_L(n: int, workers: int = 1) -> int:
    """Connected classes on ``n`` vertices whose smallest twin class has size >= 3."""
    if n < 1:
        return 0
    return len(brute_force_codes(n, "L", workers))


def anosov_count(n: int) -> int:
    """a(n), using brute force where it is cheap and quotient synthesis beyond."""
    if n <= 7:
        return enumerate_anosov(n, Method.BRUTE_FORCE).count
    return enumerate_anosov(n, Method.QUOTIENT).count
