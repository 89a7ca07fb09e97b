"""Order layer: the reflexive closure of the strict triple order, poset
verification with minimal witnesses, transitive reduction, and the
poset-induced table x*y = 0 if x <= y else x.

The strict order itself can never be reflexive (it carries an explicit
inequality clause), so the relation built here is its reflexive closure.
"""

from __future__ import annotations

from dataclasses import dataclass

from dalg.classify import Flag, _flag
from dalg.core import FiniteAlgebra
from dalg.nabla import NormalizerAlgebra


@dataclass(frozen=True)
class Relation:
    """A square boolean matrix over an ordered point list; matrix[i][j] reads
    "point i <= point j"."""

    labels: tuple
    matrix: tuple[tuple[bool, ...], ...]

    def __post_init__(self):
        labels = tuple(self.labels)
        matrix = tuple(tuple(bool(v) for v in row) for row in self.matrix)
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "matrix", matrix)
        if len(matrix) != len(labels) or any(len(r) != len(labels) for r in matrix):
            raise ValueError("relation matrix must be square and match the point list")

    @property
    def size(self):
        return len(self.labels)


@dataclass(frozen=True)
class PosetReport:
    reflexive: Flag
    antisymmetric: Flag
    transitive: Flag

    @property
    def is_poset(self):
        return self.reflexive.holds and self.antisymmetric.holds and self.transitive.holds

    def to_json(self):
        def part(fl):
            return {"holds": fl.holds, "witness": None if fl.witness is None else list(fl.witness)}

        return {
            "reflexive": part(self.reflexive),
            "antisymmetric": part(self.antisymmetric),
            "transitive": part(self.transitive),
            "is_poset": self.is_poset,
        }


def order_relation(na: NormalizerAlgebra) -> Relation:
    """rel[i][j] = (i == j) or triple_i < triple_j, over the member list."""
    masks = na.lt_masks()
    m = len(na)
    matrix = tuple(
        tuple(i == j or bool(masks[i] >> j & 1) for j in range(m)) for i in range(m)
    )
    return Relation(na.triples, matrix)


def check_poset(rel: Relation) -> PosetReport:
    """Exhaustive reflexivity/antisymmetry/transitivity check with first witnesses."""
    mat = rel.matrix
    m = rel.size

    refl = None
    for i in range(m):
        if not mat[i][i]:
            refl = (i,)
            break

    antisym = None
    for i in range(m):
        for j in range(m):
            if i != j and mat[i][j] and mat[j][i]:
                antisym = (i, j)
                break
        if antisym:
            break

    trans = None
    for i in range(m):
        for j in range(m):
            if not mat[i][j]:
                continue
            for k in range(m):
                if mat[j][k] and not mat[i][k]:
                    trans = (i, j, k)
                    break
            if trans:
                break
        if trans:
            break

    return PosetReport(_flag(refl), _flag(antisym), _flag(trans))


def hasse_cover(rel: Relation):
    """Cover edges (u, v): u < v with no w strictly between. Input must be a poset."""
    report = check_poset(rel)
    if not report.is_poset:
        raise ValueError("hasse cover requires a poset")
    mat = rel.matrix
    m = rel.size
    edges = []
    for u in range(m):
        for v in range(m):
            if u == v or not mat[u][v]:
                continue
            if any(w != u and w != v and mat[u][w] and mat[w][v] for w in range(m)):
                continue
            edges.append((u, v))
    return tuple(edges)


def reflexive_transitive_closure(size, edges):
    """Closure matrix of an edge list, for round-tripping hasse_cover output."""
    reach = [[i == j for j in range(size)] for i in range(size)]
    for u, v in edges:
        reach[u][v] = True
    for k in range(size):
        rk = reach[k]
        for i in range(size):
            if reach[i][k]:
                ri = reach[i]
                for j in range(size):
                    if rk[j]:
                        ri[j] = True
    return tuple(tuple(row) for row in reach)


def induce_bck(rel: Relation) -> FiniteAlgebra:
    """The table x*y = 0 if x <= y else x, carrier indexed by point rank.

    Requires a poset whose rank-0 point has nothing strictly below it
    (normalizer relations always satisfy this: the zero projection is the
    unique minimum). Otherwise the induced table could not keep 0 as its
    constant.
    """
    report = check_poset(rel)
    if not report.is_poset:
        raise ValueError("induced table requires a poset")
    mat = rel.matrix
    m = rel.size
    for x in range(1, m):
        if mat[x][0]:
            raise ValueError("point 0 must have nothing strictly below it")
    rows = tuple(tuple(0 if mat[x][y] else x for y in range(m)) for x in range(m))
    return FiniteAlgebra(rows)
