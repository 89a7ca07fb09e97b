"""Exhaustive generation of d-algebra tables in lexicographic order.

The search fills free cells row-major and prunes locally: diagonal cells and
row 0 are pinned to 0, and whenever the mate cell (y,x) is already 0 the
cell (x,y) must be nonzero. That single rule covers both the pairwise
antisymmetry axiom and x*0 != 0 for x != 0 (the mate of a column-0 cell
lives in row 0). With those constraints every partial assignment extends,
so the unfiltered tree has exactly as many leaves as there are tables:

    (n-1)^(n-1) * (n^2-1)^((n-1)(n-2)/2)

one factor n-1 per column-0 cell and one factor n^2-1 per unordered
off-diagonal pair (everything except the double zero).
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import permutations

from dalg.core import FiniteAlgebra

FILTER_NAMES = ("bck", "d_star", "d_transitive", "edge")

MIN_ORDER = 2
MAX_ORDER = 5


@dataclass(frozen=True)
class EnumSpec:
    """Order, optional class filters, and optional isomorphism reduction."""

    n: int
    filters: frozenset = field(default_factory=frozenset)
    iso_reduce: bool = False

    def __post_init__(self):
        if not MIN_ORDER <= self.n <= MAX_ORDER:
            raise ValueError(f"supported orders are {MIN_ORDER}..{MAX_ORDER}, got {self.n}")
        filters = frozenset(self.filters)
        unknown = filters - set(FILTER_NAMES)
        if unknown:
            raise ValueError(f"unknown filters: {sorted(unknown)}")
        object.__setattr__(self, "filters", filters)


def count_closed_form(n):
    """Number of d-algebra tables of order n, by counting free cells directly."""
    if n < 2:
        raise ValueError("count needs n >= 2")
    return (n - 1) ** (n - 1) * (n * n - 1) ** ((n - 1) * (n - 2) // 2)


def _edge_ok(rows, n):
    if set(rows[0]) != {0}:
        return False
    return all(set(rows[x]) == {0, x} for x in range(1, n))


def _dtrans_ok(rows, n):
    for x in range(n):
        rx = rows[x]
        for z in range(n):
            if rx[z] == 0:
                rz = rows[z]
                for y in range(n):
                    if rz[y] == 0 and rx[y] != 0:
                        return False
    return True


def _dstar_ok(rows, n):
    for x in range(n):
        rx = rows[x]
        for y in range(n):
            if rows[rx[y]][x] != 0:
                return False
    return True


def _bck_ok(rows, n):
    for x in range(n):
        rx = rows[x]
        for y in range(n):
            if rows[rx[rx[y]]][y] != 0:
                return False
        for y in range(n):
            xy = rx[y]
            rxy = rows[xy]
            for z in range(n):
                if rows[rxy[rx[z]]][rows[z][y]] != 0:
                    return False
    return True


_FINAL_CHECKS = {
    "edge": _edge_ok,
    "d_transitive": _dtrans_ok,
    "d_star": _dstar_ok,
    "bck": _bck_ok,
}


def _full_perms(n):
    return [(0,) + p for p in permutations(range(1, n))]


def _relabel(rows, perm):
    n = len(rows)
    out = [[0] * n for _ in range(n)]
    for x in range(n):
        rx = rows[x]
        ox = out[perm[x]]
        for y in range(n):
            ox[perm[y]] = perm[rx[y]]
    return tuple(tuple(r) for r in out)


def _orbit_min(rows, perms):
    best = rows
    for perm in perms[1:]:
        cand = _relabel(rows, perm)
        if cand < best:
            best = cand
    return best


def canonical_form(alg: FiniteAlgebra) -> FiniteAlgebra:
    """Lexicographically least table among relabelings fixing element 0."""
    return FiniteAlgebra(_orbit_min(alg.rows, _full_perms(alg.n)))


def _dtrans_cell_violation(tab, n, x, y):
    """True when the just-assigned cell (x,y) already refutes transitivity.

    Every transitivity instance is caught at its last assigned cell, so a
    table that survives all cell checks is d-transitive.
    """
    if tab[x][y]:
        tx = tab[x]
        for z in range(n):
            if tx[z] == 0 and tab[z][y] == 0:
                return True
    else:
        tx = tab[x]
        ty = tab[y]
        for w in range(n):
            if tab[w][x] == 0 and tab[w][y] > 0:
                return True
            if ty[w] == 0 and tx[w] > 0:
                return True
    return False


def _partition_tables(spec: EnumSpec, first_value):
    """Stream of surviving tables whose first free cell (1,0) holds first_value."""
    n = spec.n
    filters = spec.filters
    want_edge = "edge" in filters
    want_dtr = "d_transitive" in filters
    finals = [_FINAL_CHECKS[name] for name in FILTER_NAMES if name in filters]
    perms = _full_perms(n) if spec.iso_reduce else None

    tab = [[-1] * n for _ in range(n)]
    for y in range(n):
        tab[0][y] = 0
    for x in range(n):
        tab[x][x] = 0
    cells = [(x, y) for x in range(1, n) for y in range(n) if y != x]
    tab[1][0] = first_value
    if want_edge and first_value != 1:
        return
    if want_dtr and _dtrans_cell_violation(tab, n, 1, 0):
        return

    def rec(i):
        if i == len(cells):
            rows = tuple(tuple(r) for r in tab)
            if all(check(rows, n) for check in finals):
                if perms is None or _orbit_min(rows, perms) == rows:
                    yield rows
            return
        x, y = cells[i]
        mate_zero = tab[y][x] == 0
        row = tab[x]
        if want_edge:
            candidates = (x,) if mate_zero else (0, x)
        else:
            candidates = range(1, n) if mate_zero else range(n)
        for v in candidates:
            row[y] = v
            if want_dtr and _dtrans_cell_violation(tab, n, x, y):
                continue
            yield from rec(i + 1)
        row[y] = -1

    yield from rec(1)


def enumerate_d_algebras(spec: EnumSpec, jobs=1):
    """Deterministic stream of every table passing the spec, in lex table order.

    With jobs > 1 the search space is partitioned on the first free cell and
    the partitions are merged back in order, so the stream is identical to a
    serial run.
    """
    parts = [(spec, v) for v in range(1, spec.n)]
    if jobs and jobs > 1:
        with ProcessPoolExecutor(max_workers=min(jobs, len(parts))) as ex:
            for chunk in ex.map(_partition_worker, parts):
                for rows in chunk:
                    yield FiniteAlgebra(rows)
    else:
        for args in parts:
            for rows in _partition_tables(*args):
                yield FiniteAlgebra(rows)


def _partition_worker(args):
    return list(_partition_tables(*args))
