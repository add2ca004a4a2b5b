"""The two-step nilpotent Lie algebra of a graph.

Basis: one generator ``v_i`` per vertex and one generator ``e_ij`` per edge
``i < j``.  The only nonzero brackets are ``[v_i, v_j] = e_ij`` and
``[v_j, v_i] = -e_ij`` for adjacent ``i < j``; everything brackets to zero
against an edge generator.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from .errors import InputError
from .graph import SimpleGraph

Vector = dict[int, Fraction]


@dataclass(frozen=True)
class GraphLieAlgebra:
    """Structure constants over an explicit basis.

    ``brackets[(a, b)]`` maps basis index ``c`` to the coefficient of basis
    element ``c`` in ``[x_a, x_b]``; absent pairs bracket to zero.
    """

    labels: tuple[str, ...]
    brackets: dict[tuple[int, int], Vector] = field(hash=False)

    @property
    def dim(self) -> int:
        return len(self.labels)

    def bracket_basis(self, a: int, b: int) -> Vector:
        return self.brackets.get((a, b), {})

    def bracket(self, x: Vector, y: Vector) -> Vector:
        out: Vector = {}
        for a, ca in x.items():
            for b, cb in y.items():
                for c, cc in self.bracket_basis(a, b).items():
                    out[c] = out.get(c, Fraction(0)) + ca * cb * cc
        return {c: v for c, v in out.items() if v}

    def structure_constants(self) -> list[dict]:
        rows = []
        for (a, b), vec in sorted(self.brackets.items()):
            for c, coef in sorted(vec.items()):
                if coef:
                    rows.append({"i": self.labels[a], "j": self.labels[b], "k": self.labels[c], "c": str(coef)})
        return rows

    def to_json(self) -> str:
        return json.dumps({"dim": self.dim, "basis": list(self.labels), "brackets": self.structure_constants()})


def build_lie_algebra(g: SimpleGraph) -> GraphLieAlgebra:
    if g.n < 1:
        raise InputError("the Lie algebra needs at least one vertex")
    edges = g.edges()
    labels = tuple(f"v{i}" for i in range(g.n)) + tuple(f"e{i}_{j}" for i, j in edges)
    brackets: dict[tuple[int, int], Vector] = {}
    for index, (i, j) in enumerate(edges):
        e = g.n + index
        brackets[(i, j)] = {e: Fraction(1)}
        brackets[(j, i)] = {e: Fraction(-1)}
    return GraphLieAlgebra(labels, brackets)


def _unit(a: int) -> Vector:
    return {a: Fraction(1)}


def verify_two_step(algebra: GraphLieAlgebra) -> bool:
    """Antisymmetry, Jacobi, and vanishing of ``[x, [y, z]]`` on all basis triples."""
    d = algebra.dim
    for a, b in product(range(d), repeat=2):
        ab = algebra.bracket_basis(a, b)
        ba = algebra.bracket_basis(b, a)
        if any(ab.get(c, 0) + ba.get(c, 0) for c in set(ab) | set(ba)):
            return False
    for a, b, c in product(range(d), repeat=3):
        x, y, z = _unit(a), _unit(b), _unit(c)
        if algebra.bracket(x, algebra.bracket(y, z)):
            return False
    for a, b, c in product(range(d), repeat=3):
        x, y, z = _unit(a), _unit(b), _unit(c)
        total: Vector = {}
        for term in (
            algebra.bracket(x, algebra.bracket(y, z)),
            algebra.bracket(y, algebra.bracket(z, x)),
            algebra.bracket(z, algebra.bracket(x, y)),
        ):
            for k, v in term.items():
                total[k] = total.get(k, Fraction(0)) + v
        if any(total.values()):
            return False
    return True


def center_contains_edges(algebra: GraphLieAlgebra, n: int) -> bool:
    """Every edge generator (basis index ``>= n``) brackets to zero with everything."""
    return all(
        not algebra.bracket_basis(a, e) and not algebra.bracket_basis(e, a)
        for e in range(n, algebra.dim)
        for a in range(algebra.dim)
    )
