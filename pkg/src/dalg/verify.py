"""Statement harness: each registered claim is a (hypothesis, conclusion)
pair evaluated over a universe of finite algebras, producing a verdict with
the first counterexample found, if any.

Statements are data, not code paths, so they can be listed, selected by id,
and reported in a fixed order. A few are registered as informational: they
document readings that are expected to fail (or that only demonstrate why a
stricter reading cannot hold), and they never affect exit codes.
"""

from __future__ import annotations

from dataclasses import dataclass

from dalg.classify import check_axioms
from dalg.core import FiniteAlgebra
from dalg.enumeration import (EnumSpec, _bck_ok, _dstar_ok, _dtrans_ok, _edge_ok,
                              enumerate_d_algebras)
from dalg.nabla import NormalizerAlgebra, epsilon
from dalg.order import check_poset, induce_bck, order_relation


class AlgebraContext:
    """Per-algebra scratchpad shared by every statement in one pass.

    Everything is computed lazily and at most once: class flags, the
    normalizer, the strict-order bitmasks, and the diagonal star outcomes.
    """

    __slots__ = ("alg", "rows", "n", "_d_algebra", "_edge", "_dtrans", "_bck",
                 "_dstar", "_na", "_diag", "_diam_zero", "_relation")

    def __init__(self, alg):
        self.alg = alg
        self.rows = alg.rows
        self.n = alg.n
        self._d_algebra = None
        self._edge = None
        self._dtrans = None
        self._bck = None
        self._dstar = None
        self._na = None
        self._diag = None
        self._diam_zero = None
        self._relation = None

    @property
    def is_d_algebra(self):
        if self._d_algebra is None:
            rows, n = self.rows, self.n
            ok = all(rows[x][x] == 0 for x in range(n)) and set(rows[0]) == {0}
            if ok:
                for x in range(n):
                    for y in range(x + 1, n):
                        if rows[x][y] == 0 and rows[y][x] == 0:
                            ok = False
                            break
                    if not ok:
                        break
            self._d_algebra = ok
        return self._d_algebra

    @property
    def is_edge(self):
        if self._edge is None:
            self._edge = _edge_ok(self.rows, self.n)
        return self._edge

    @property
    def is_d_transitive(self):
        if self._dtrans is None:
            self._dtrans = _dtrans_ok(self.rows, self.n)
        return self._dtrans

    @property
    def is_bck(self):
        if self._bck is None:
            self._bck = self.is_d_algebra and _bck_ok(self.rows, self.n)
        return self._bck

    @property
    def is_d_star(self):
        if self._dstar is None:
            self._dstar = self.is_d_algebra and _dstar_ok(self.rows, self.n)
        return self._dstar

    @property
    def na(self) -> NormalizerAlgebra:
        if self._na is None:
            self._na = NormalizerAlgebra(self.alg)
        return self._na

    @property
    def diag(self):
        """Star outcome of t * t for every member, in member order."""
        if self._diag is None:
            na = self.na
            self._diag = [na.star_by_rank(i, i) for i in range(len(na))]
        return self._diag

    @property
    def diam_zero(self):
        if self._diam_zero is None:
            rows = self.rows
            self._diam_zero = [rows[c][a] == 0 for (a, _, c) in self.na.triples]
        return self._diam_zero

    @property
    def all_diam_zero(self):
        return all(self.diam_zero)

    @property
    def all_eps(self):
        return all(a == b == c for (a, b, c) in self.na.triples)

    @property
    def all_diag_defined(self):
        return all(o.defined for o in self.diag)

    @property
    def relation(self):
        if self._relation is None:
            self._relation = order_relation(self.na)
        return self._relation


@dataclass(frozen=True)
class Statement:
    id: str
    claim: str
    informational: bool
    hypothesis: callable
    conclusion: callable  # returns a witness dict, or None when the claim holds


@dataclass(frozen=True)
class Verdict:
    statement_id: str
    universe: str
    informational: bool
    checked: int
    holds: bool
    counterexample: dict | None

    def to_json(self):
        return {
            "id": self.statement_id,
            "universe": self.universe,
            "informational": self.informational,
            "checked": self.checked,
            "holds": self.holds,
            "counterexample": self.counterexample,
        }


@dataclass(frozen=True)
class Universe:
    """A single table or an enumerated family, with a stable description."""

    description: str
    algebra: FiniteAlgebra | None = None
    spec: EnumSpec | None = None
    jobs: int = 1

    @staticmethod
    def single(alg, description=None):
        return Universe(description or f"table(n={alg.n})", algebra=alg)

    @staticmethod
    def enumerated(spec, jobs=1):
        desc = f"order-{spec.n} d-algebras"
        if spec.filters:
            desc += " filter=" + ",".join(sorted(spec.filters))
        if spec.iso_reduce:
            desc += " iso"
        return Universe(desc, spec=spec, jobs=jobs)

    def algebras(self):
        if self.algebra is not None:
            yield self.algebra
        elif self.spec is not None:
            yield from enumerate_d_algebras(self.spec, jobs=self.jobs)


def _tl(t):
    return list(t)


# --- conclusions -----------------------------------------------------------

def _concl_edge_unit(ctx):
    rows = ctx.rows
    for x in range(ctx.n):
        if rows[x][0] != x:
            return {"x": x, "value": rows[x][0]}
    return None


def _concl_axiom_v(ctx):
    rows, n = ctx.rows, ctx.n
    for x in range(n):
        rx = rows[x]
        for y in range(n):
            xy = rx[y]
            rxy = rows[xy]
            for z in range(n):
                v = rows[rxy[rx[z]]][rows[z][y]]
                if v != 0:
                    return {"x": x, "y": y, "z": z, "value": v}
    return None


def _concl_bck(ctx):
    w = _concl_axiom_v(ctx)
    if w is not None:
        return {"axiom": "V", **w}
    rows, n = ctx.rows, ctx.n
    for x in range(n):
        rx = rows[x]
        for y in range(n):
            v = rows[rx[rx[y]]][y]
            if v != 0:
                return {"axiom": "VI", "x": x, "y": y, "value": v}
    return None


def _concl_epsilon_subalgebra(ctx):
    na = ctx.na
    rows, n = ctx.rows, ctx.n
    z3 = (0, 0, 0)
    for x in range(n):
        for y in range(n):
            out = na.star(epsilon(x), epsilon(y))
            if not out.defined or out.result != epsilon(rows[x][y]):
                return {"part": "epsilon-image", "x": x, "y": y}
    for x in range(n):
        if na.star(epsilon(x), epsilon(x)).result != z3:
            return {"part": "I", "x": x}
        if na.star(epsilon(0), epsilon(x)).result != z3:
            return {"part": "II", "x": x}
    for x in range(n):
        for y in range(n):
            if x != y and na.star(epsilon(x), epsilon(y)).result == z3 \
                    and na.star(epsilon(y), epsilon(x)).result == z3:
                return {"part": "III", "x": x, "y": y}
    if ctx.is_d_star:
        for x in range(n):
            for y in range(n):
                u = na.star(epsilon(x), epsilon(y))
                if not u.defined:
                    return {"part": "IV", "x": x, "y": y}
                v = na.star(u.result, epsilon(x))
                if not v.defined or v.result != z3:
                    return {"part": "IV", "x": x, "y": y}
    return None


def _concl_star_total(ctx):
    na = ctx.na
    m = len(na)
    for i in range(m):
        for j in range(m):
            out = na.star_by_rank(i, j)
            if not out.defined:
                return {"t1": _tl(na.triples[i]), "t2": _tl(na.triples[j]),
                        "equation": out.failed_equation, "value": out.failed_value}
    return None


def _concl_diag_form(ctx):
    na = ctx.na
    rows = ctx.rows
    for i, out in enumerate(ctx.diag):
        a, b, c = na.triples[i]
        if not out.defined or out.result != (0, 0, rows[c][a]):
            return {"triple": _tl(na.triples[i])}
    return None


def _concl_d_transitive(ctx):
    rows, n = ctx.rows, ctx.n
    for x in range(n):
        rx = rows[x]
        for z in range(n):
            if rx[z] == 0:
                rz = rows[z]
                for y in range(n):
                    if rz[y] == 0 and rx[y] != 0:
                        return {"x": x, "z": z, "y": y}
    return None


def _concl_antisymmetric(ctx):
    na = ctx.na
    masks = na.lt_masks()
    for i in range(len(na)):
        both = masks[i]
        if both:
            for j in range(i + 1, len(na)):
                if both >> j & 1 and masks[j] >> i & 1:
                    return {"t1": _tl(na.triples[i]), "t2": _tl(na.triples[j])}
    return None


def _concl_zero_iff_cd(ctx):
    na = ctx.na
    rows = ctx.rows
    m = len(na)
    z3 = (0, 0, 0)
    for i in range(m):
        c = na.triples[i][2]
        rc = rows[c]
        for j in range(m):
            out = na.star_by_rank(i, j)
            if out.defined:
                hits_zero = out.result == z3
                cd_zero = rc[na.triples[j][0]] == 0
                if hits_zero != cd_zero:
                    return {"t1": _tl(na.triples[i]), "t2": _tl(na.triples[j]),
                            "star_is_zero": hits_zero, "cd_is_zero": cd_zero}
    return None


def _concl_diam_zero_iff_eps(ctx):
    na = ctx.na
    for i, zero in enumerate(ctx.diam_zero):
        a, b, c = na.triples[i]
        if zero != (a == b == c):
            return {"triple": _tl(na.triples[i]), "diameter": ctx.rows[c][a]}
    return None


def _concl_diag_hits_zero(ctx):
    for i, out in enumerate(ctx.diag):
        if not out.defined or out.result != (0, 0, 0):
            return {"triple": _tl(ctx.na.triples[i])}
    return None


def _concl_lt_transitive(ctx):
    na = ctx.na
    masks = na.lt_masks()
    m = len(na)
    for i in range(m):
        mi = masks[i]
        rest = mi
        while rest:
            j = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            missing = masks[j] & ~mi
            if missing:
                k = (missing & -missing).bit_length() - 1
                return {"t1": _tl(na.triples[i]), "t2": _tl(na.triples[j]),
                        "t3": _tl(na.triples[k])}
    return None


def _concl_poset(ctx):
    report = check_poset(ctx.relation)
    if report.is_poset:
        return None
    for part in ("reflexive", "antisymmetric", "transitive"):
        fl = getattr(report, part)
        if not fl.holds:
            return {"part": part, "points": [_tl(ctx.na.triples[i]) for i in fl.witness]}
    return None


def _concl_induced_bck(ctx):
    report = check_poset(ctx.relation)
    if not report.is_poset:
        return {"part": "not-a-poset"}
    induced = induce_bck(ctx.relation)
    axioms = check_axioms(induced)
    for name in ("I", "II", "III", "V", "VI"):
        fl = axioms[name]
        if not fl.holds:
            return {"axiom": name, "witness": _tl(fl.witness)}
    return None


def _concl_eps_diam_zero(ctx):
    rows = ctx.rows
    for x in range(ctx.n):
        if rows[x][x] != 0:
            return {"x": x, "diameter": rows[x][x]}
    return None


def _diam_family(ctx, keep):
    na = ctx.na
    rows = ctx.rows
    for i, t in enumerate(na.triples):
        if keep(t) and not ctx.diam_zero[i]:
            a, _, c = t
            return {"triple": _tl(t), "diameter": rows[c][a]}
    return None


def _concl_diam_xyx(ctx):
    return _diam_family(ctx, lambda t: t[2] == t[0])


def _concl_diam_xy0(ctx):
    return _diam_family(ctx, lambda t: t[2] == 0)


def _concl_diam_0yz(ctx):
    return _diam_family(ctx, lambda t: t[0] == 0)


def _concl_some_diag_off_zero(ctx):
    for out in ctx.diag:
        if not out.defined or out.result != (0, 0, 0):
            return None
    return {"note": "t*t reaches the zero triple for every member"}


def _concl_note_x0(ctx):
    rows = ctx.rows
    for x in range(1, ctx.n):
        if rows[x][0] == 0:
            return {"x": x}
    return None


def _concl_lt_irreflexive(ctx):
    na = ctx.na
    for t in na.triples:
        if na.strict_less(t, t):
            return {"triple": _tl(t)}
    return None


# --- hypotheses -------------------------------------------------------------

def _hyp_d(ctx):
    return ctx.is_d_algebra


def _hyp_edge(ctx):
    return ctx.is_d_algebra and ctx.is_edge


def _hyp_edge_dtrans(ctx):
    return ctx.is_d_algebra and ctx.is_edge and ctx.is_d_transitive


def _hyp_bck(ctx):
    return ctx.is_bck


def _hyp_dtrans(ctx):
    return ctx.is_d_algebra and ctx.is_d_transitive


def _hyp_edge_diag_defined(ctx):
    return ctx.is_d_algebra and ctx.is_edge and ctx.all_diag_defined


def _hyp_bck_diag_defined(ctx):
    return ctx.is_bck and ctx.all_diag_defined


def _hyp_dtrans_diam_zero(ctx):
    return ctx.is_d_algebra and ctx.is_d_transitive and ctx.all_diam_zero


def _hyp_dtrans_all_eps(ctx):
    return ctx.is_d_algebra and ctx.is_d_transitive and ctx.all_eps


def _hyp_diam_zero_both_ways(ctx):
    if not ctx.is_d_algebra or not ctx.all_diam_zero:
        return False
    na = ctx.na
    rows = ctx.rows
    for a, b, c in na.triples:
        if (c, b, a) in na and rows[a][c] != 0:
            return False
    return True


def _hyp_nontrivial(ctx):
    return ctx.is_d_algebra and ctx.n >= 2


_REGISTRY_ITEMS = [
    Statement("L1.3", "edge algebras satisfy x*0 = x for every x",
              False, _hyp_edge, _concl_edge_unit),
    # Informational: refuted by exhaustive search at order 4 (an edge table
    # failing V at (1,3,2) exists); edge does force VI, which T1.6 relies on.
    Statement("P1.4", "edge algebras satisfy axiom V",
              True, _hyp_edge, _concl_axiom_v),
    Statement("T1.6", "d-transitive edge algebras satisfy the BCK axioms V and VI",
              False, _hyp_edge_dtrans, _concl_bck),
    Statement("P-S", "the projection image is closed under star and inherits the base's class",
              False, _hyp_d, _concl_epsilon_subalgebra),
    Statement("T2.2", "over a BCK base, star is defined on every pair of members",
              False, _hyp_bck, _concl_star_total),
    Statement("P2.3", "over a d-transitive base, t*t is defined and equals (0, 0, c*a)",
              False, _hyp_dtrans, _concl_diag_form),
    Statement("P2.3-conv-edge", "an edge base whose diagonal star is total is d-transitive",
              False, _hyp_edge_diag_defined, _concl_d_transitive),
    Statement("P2.3-conv-bck", "a BCK base whose diagonal star is total is d-transitive",
              False, _hyp_bck_diag_defined, _concl_d_transitive),
    Statement("P2.4", "mutual star-to-zero forces equality of the two members",
              False, _hyp_d, _concl_antisymmetric),
    Statement("T2.5", "over an edge base, a defined star hits the zero triple iff c*d = 0",
              False, _hyp_edge, _concl_zero_iff_cd),
    Statement("P2.6", "over a d-transitive base, diameter 0 holds exactly at projections",
              False, _hyp_dtrans, _concl_diam_zero_iff_eps),
    Statement("P2.7", "all diameters zero in both orientations makes t*t hit the zero triple",
              True, _hyp_diam_zero_both_ways, _concl_diag_hits_zero),
    Statement("P2.8", "over a d-transitive base, the strict order is transitive",
              False, _hyp_dtrans, _concl_lt_transitive),
    Statement("T2.9", "d-transitive with all diameters zero: the reflexive order is a poset",
              False, _hyp_dtrans_diam_zero, _concl_poset),
    Statement("C2.10", "d-transitive with only projection members: the reflexive order is a poset",
              False, _hyp_dtrans_all_eps, _concl_poset),
    Statement("C2.11", "d-transitive with all diameters zero: the induced table is BCK",
              False, _hyp_dtrans_diam_zero, _concl_induced_bck),
    Statement("C2.12", "d-transitive with only projection members: the induced table is BCK",
              False, _hyp_dtrans_all_eps, _concl_induced_bck),
    Statement("R-diam-eps", "projection triples have diameter 0",
              False, _hyp_d, _concl_eps_diam_zero),
    Statement("R-diam-xyx", "members of the form (x,y,x) have diameter 0",
              False, _hyp_d, _concl_diam_xyx),
    Statement("R-diam-xy0", "members of the form (x,y,0) have diameter 0",
              False, _hyp_d, _concl_diam_xy0),
    Statement("R-diam-bck", "over a BCK base, members (0,y,z) have diameter 0",
              True, _hyp_bck, _concl_diam_0yz),
    Statement("R-nabla-not-I", "some member of a nontrivial normalizer has t*t off the zero triple",
              False, _hyp_nontrivial, _concl_some_diag_off_zero),
    Statement("R-note-x0", "x*0 = 0 forces x = 0",
              False, _hyp_d, _concl_note_x0),
    Statement("R-lt-irrefl", "the strict order is irreflexive on every normalizer",
              True, _hyp_d, _concl_lt_irreflexive),
]

REGISTRY = {s.id: s for s in sorted(_REGISTRY_ITEMS, key=lambda s: s.id)}


def statement_ids():
    return tuple(REGISTRY)


def verify_statements(ids, universe: Universe, max_counterexamples=1):
    """Run the selected statements in one pass over the universe."""
    stmts = []
    for sid in ids:
        if sid not in REGISTRY:
            raise KeyError(f"unknown statement id: {sid}")
        stmts.append(REGISTRY[sid])
    checked = {s.id: 0 for s in stmts}
    counterexamples = {s.id: None for s in stmts}
    open_count = len(stmts)
    for alg in universe.algebras():
        if open_count == 0:
            break
        ctx = AlgebraContext(alg)
        for s in stmts:
            if counterexamples[s.id] is not None:
                continue
            if s.hypothesis(ctx):
                checked[s.id] += 1
                witness = s.conclusion(ctx)
                if witness is not None:
                    counterexamples[s.id] = {
                        "table": [list(r) for r in alg.rows],
                        "witness": witness,
                    }
                    open_count -= 1
    return [
        Verdict(s.id, universe.description, s.informational, checked[s.id],
                counterexamples[s.id] is None, counterexamples[s.id])
        for s in stmts
    ]


def verify_statement(statement_id, universe: Universe) -> Verdict:
    """Check one registered statement over a single algebra or a family."""
    return verify_statements([statement_id], universe)[0]


def verify_all(universe: Universe):
    """Every registered statement over the universe, reported in id order."""
    return verify_statements(statement_ids(), universe)
