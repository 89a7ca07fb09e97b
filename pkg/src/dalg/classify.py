"""Axiom flags (I)-(X) and class predicates, with lexicographically minimal witnesses.

Finite tables are scanned exhaustively. The rational formula algebra is
scanned over a SampleGrid only, and its report marks itself refutation-only:
a passing flag there means "no counterexample in the grid", never "proved".
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from dalg.core import FiniteAlgebra, FormulaAlgebra, SampleGrid

AXIOM_ORDER = ("I", "II", "III", "IV", "V", "VI", "VII", "VIII", "IX", "X")
CLASS_ORDER = ("d_algebra", "d_star", "edge", "d_transitive", "bck")
FLAG_ORDER = AXIOM_ORDER + CLASS_ORDER


@dataclass(frozen=True)
class Flag:
    """One verdict: holds, or fails with the first refuting tuple found."""

    holds: bool
    witness: tuple | None = None


def _flag(witness):
    return Flag(witness is None, witness)


def _json_value(v):
    return str(v) if isinstance(v, Fraction) else v


class AxiomReport:
    """All axiom and class flags for one algebra (or one sampled grid)."""

    __slots__ = ("flags", "refutation_only", "grid")

    def __init__(self, flags, refutation_only=False, grid=None):
        self.flags = dict(flags)
        self.refutation_only = refutation_only
        self.grid = grid

    def __getitem__(self, name):
        return self.flags[name]

    def holds(self, name):
        return self.flags[name].holds

    def witness(self, name):
        return self.flags[name].witness

    def to_json(self):
        """Stable mapping: flag name -> {holds, witness}, in FLAG_ORDER."""
        out = {}
        for name in FLAG_ORDER:
            fl = self.flags[name]
            out[name] = {
                "holds": fl.holds,
                "witness": None if fl.witness is None else [_json_value(v) for v in fl.witness],
            }
        return out


def _axiom_flags(op, elems, zero):
    """Scan the ten axiom formulas over `elems` in order, recording first failures."""
    flags = {}

    w = None
    for x in elems:
        if op(x, x) != zero:
            w = (x,)
            break
    flags["I"] = _flag(w)

    w = None
    for x in elems:
        if op(zero, x) != zero:
            w = (x,)
            break
    flags["II"] = _flag(w)

    w = None
    for x in elems:
        for y in elems:
            if x != y and op(x, y) == zero and op(y, x) == zero:
                w = (x, y)
                break
        if w:
            break
    flags["III"] = _flag(w)

    w = None
    for x in elems:
        for y in elems:
            if op(op(x, y), x) != zero:
                w = (x, y)
                break
        if w:
            break
    flags["IV"] = _flag(w)

    w = None
    for x in elems:
        for y in elems:
            for z in elems:
                if op(op(op(x, y), op(x, z)), op(z, y)) != zero:
                    w = (x, y, z)
                    break
            if w:
                break
        if w:
            break
    flags["V"] = _flag(w)

    w = None
    for x in elems:
        for y in elems:
            if op(op(x, op(x, y)), y) != zero:
                w = (x, y)
                break
        if w:
            break
    flags["VI"] = _flag(w)

    w = None
    for x in elems:
        for y in elems:
            for z in elems:
                if op(op(op(x, y), op(z, y)), op(x, z)) != zero:
                    w = (x, y, z)
                    break
            if w:
                break
        if w:
            break
    flags["VII"] = _flag(w)

    # VIII is the relational reading "x*(x*y) <= y"; as a formula it coincides
    # with VI but it is scanned and reported on its own.
    w = None
    for x in elems:
        for y in elems:
            if op(op(x, op(x, y)), y) != zero:
                w = (x, y)
                break
        if w:
            break
    flags["VIII"] = _flag(w)

    w = None
    for x in elems:
        if op(x, zero) != x:
            w = (x,)
            break
    flags["IX"] = _flag(w)

    # X reads "x*y <= x", the same formula as IV.
    w = None
    for x in elems:
        for y in elems:
            if op(op(x, y), x) != zero:
                w = (x, y)
                break
        if w:
            break
    flags["X"] = _flag(w)

    return flags


def _edge_scan(op, elems, zero, exact):
    """Witness for the edge property: the value set of row x must be {x, 0}.

    Returns (x, value) for a foreign value, or (x,) when the row's value set
    is a proper subset of {x, 0} (only decidable when `exact` is true).
    """
    for x in elems:
        seen = set()
        for a in elems:
            v = op(x, a)
            if v != x and v != zero:
                return (x, v)
            seen.add(v)
        if exact and seen != {x, zero}:
            return (x,)
    return None


def _d_transitive_scan(op, elems, zero):
    for x in elems:
        for z in elems:
            if op(x, z) != zero:
                continue
            for y in elems:
                if op(z, y) == zero and op(x, y) != zero:
                    return (x, z, y)
    return None


def _compose_classes(flags, edge_w, dtrans_w):
    def first_failure(names):
        for name in names:
            if not flags[name].holds:
                return flags[name].witness
        return None

    flags["d_algebra"] = _flag(first_failure(("I", "II", "III")))
    flags["d_star"] = _flag(first_failure(("I", "II", "III", "IV")))
    flags["edge"] = _flag(edge_w)
    flags["d_transitive"] = _flag(dtrans_w)
    flags["bck"] = _flag(first_failure(("I", "II", "III", "V", "VI")))
    return flags


def check_axioms(alg: FiniteAlgebra) -> AxiomReport:
    """Decide every axiom and class flag by exhaustive scan over the carrier."""
    rows = alg.rows
    elems = range(alg.n)
    op = lambda x, y: rows[x][y]
    flags = _axiom_flags(op, elems, 0)
    edge_w = _edge_scan(op, elems, 0, exact=True)
    dtrans_w = _d_transitive_scan(op, elems, 0)
    return AxiomReport(_compose_classes(flags, edge_w, dtrans_w))


def is_edge(alg: FiniteAlgebra) -> Flag:
    rows = alg.rows
    return _flag(_edge_scan(lambda x, y: rows[x][y], range(alg.n), 0, exact=True))


def is_d_transitive(alg: FiniteAlgebra) -> Flag:
    rows = alg.rows
    return _flag(_d_transitive_scan(lambda x, y: rows[x][y], range(alg.n), 0))


def check_formula_axioms(alg: FormulaAlgebra, grid: SampleGrid) -> AxiomReport:
    """Same flags as check_axioms, quantified over the grid values only.

    The edge flag can only be refuted by a foreign value; grids cannot show
    that a value set is too small, since the carrier is infinite.
    """
    elems = grid.values
    zero = alg.zero
    op = alg.op
    flags = _axiom_flags(op, elems, zero)
    edge_w = _edge_scan(op, elems, zero, exact=False)
    dtrans_w = _d_transitive_scan(op, elems, zero)
    return AxiomReport(_compose_classes(flags, edge_w, dtrans_w),
                       refutation_only=True, grid=grid)
