"""The triple normalizer: members (a,b,c) with a*b = 0 = b*c, the partial star
operation, the diameter, and the strict order it generates.

Star is materialized as a total function into StarOutcome instead of a
runtime fault, because the construction is only a partial algebra: an
outcome is either defined with its result triple, or undefined together
with which of the two definedness equations failed and the value it took.
"""

from __future__ import annotations

from dataclasses import dataclass

from dalg.core import FORMULA, FiniteAlgebra, as_rational


def epsilon(x):
    """The triple projection of x: (x, x, x)."""
    return (x, x, x)


@dataclass(frozen=True)
class StarOutcome:
    """Result of one star evaluation.

    failed_equation is 1 when (a*f)*(b*e) was nonzero, 2 when (b*e)*(c*d)
    was; failed_value carries the offending value. Both are None when the
    outcome is defined. If both equations fail, the first is reported.
    """

    defined: bool
    result: tuple | None = None
    failed_equation: int | None = None
    failed_value: object | None = None


class NormalizerAlgebra:
    """All member triples of a finite table, in lexicographic order, plus the
    star operation cached per pair of members.

    Immutable after construction; the lazy caches only ever move from absent
    to a value, so concurrent readers observe consistent answers.
    """

    def __init__(self, base: FiniteAlgebra):
        self.base = base
        rows = base.rows
        n = base.n
        zeros = [[y for y in range(n) if rows[x][y] == 0] for x in range(n)]
        triples = []
        for a in range(n):
            for b in zeros[a]:
                for c in zeros[b]:
                    triples.append((a, b, c))
        # construction order is already lexicographic: a, then b, then c ascending
        self.triples = tuple(triples)
        self._rank = {t: i for i, t in enumerate(triples)}
        self._star_cache = {}
        self._lt_masks = None
        self._star_table = None

    def __len__(self):
        return len(self.triples)

    def __iter__(self):
        return iter(self.triples)

    def __contains__(self, t):
        return t in self._rank

    def rank(self, t):
        try:
            return self._rank[t]
        except KeyError:
            raise ValueError(f"triple {t!r} is not in the normalizer") from None

    def star(self, t1, t2) -> StarOutcome:
        """Evaluate t1 * t2 componentwise, checking both definedness equations."""
        return self.star_by_rank(self.rank(t1), self.rank(t2))

    def star_by_rank(self, i, j) -> StarOutcome:
        out = self._star_cache.get((i, j))
        if out is None:
            rows = self.base.rows
            a, b, c = self.triples[i]
            d, e, f = self.triples[j]
            r0 = rows[a][f]
            r1 = rows[b][e]
            r2 = rows[c][d]
            v1 = rows[r0][r1]
            if v1 != 0:
                out = StarOutcome(False, None, 1, v1)
            else:
                v2 = rows[r1][r2]
                if v2 != 0:
                    out = StarOutcome(False, None, 2, v2)
                else:
                    out = StarOutcome(True, (r0, r1, r2))
            self._star_cache[(i, j)] = out
        return out

    def star_table(self):
        """The full outcome table, rows and columns in member order."""
        if self._star_table is None:
            m = len(self.triples)
            self._star_table = tuple(
                tuple(self.star_by_rank(i, j) for j in range(m)) for i in range(m)
            )
        return self._star_table

    def diameter(self, t):
        """The diameter of a member (a,b,c): the element c*a."""
        self.rank(t)
        a, _, c = t
        return self.base.rows[c][a]

    def strict_less(self, t1, t2):
        """t1 < t2: distinct, star defined, and the result is the zero triple."""
        if t1 == t2:
            return False
        out = self.star(t1, t2)
        return out.defined and out.result == (0, 0, 0)

    def lt_masks(self):
        """Bitmask rows of the strict order: bit j of row i means triple i < triple j.

        Equivalent to strict_less pairwise, inlined for scans: the result is
        the zero triple exactly when all three components vanish, and both
        definedness equations then evaluate to 0*0.
        """
        if self._lt_masks is None:
            rows = self.base.rows
            triples = self.triples
            m = len(triples)
            zz = rows[0][0] == 0
            masks = [0] * m
            if zz:
                for i in range(m):
                    a, b, c = triples[i]
                    ra, rb, rc = rows[a], rows[b], rows[c]
                    acc = 0
                    for j in range(m):
                        if i != j:
                            d, e, f = triples[j]
                            if ra[f] == 0 and rb[e] == 0 and rc[d] == 0:
                                acc |= 1 << j
                    masks[i] = acc
            self._lt_masks = masks
        return self._lt_masks


def build_normalizer(alg: FiniteAlgebra) -> NormalizerAlgebra:
    """Collect every candidate triple of the carrier that satisfies membership."""
    return NormalizerAlgebra(alg)


def membership_by_products(a, b, c):
    """Direct membership test for the formula algebra: a*(a-b) = 0 and b*(b-c) = 0."""
    return FORMULA.op(a, b) == 0 and FORMULA.op(b, c) == 0


def membership_by_family(a, b, c):
    """Closed-form membership: one of (x,x,x), (0,x,x) or (0,0,x)."""
    return (a == b == c) or (a == 0 and b == c) or (a == 0 and b == 0)


def rational_nabla_membership(a, b, c):
    """Membership of (a,b,c) in the formula algebra's normalizer.

    Both the direct product test and the closed-form family test are run and
    must agree; a disagreement would be a bug, not a data condition.
    """
    a, b, c = as_rational(a), as_rational(b), as_rational(c)
    direct = membership_by_products(a, b, c)
    family = membership_by_family(a, b, c)
    if direct != family:
        raise AssertionError(f"membership routes disagree on {(a, b, c)}")
    return direct


def _require_formula_member(t):
    a, b, c = (as_rational(v) for v in t)
    if not rational_nabla_membership(a, b, c):
        raise ValueError(f"triple {t!r} is not in the formula normalizer")
    return a, b, c


def formula_star(t1, t2) -> StarOutcome:
    """Star on the formula algebra's normalizer, in exact rationals."""
    a, b, c = _require_formula_member(t1)
    d, e, f = _require_formula_member(t2)
    op = FORMULA.op
    r0, r1, r2 = op(a, f), op(b, e), op(c, d)
    v1 = op(r0, r1)
    if v1 != 0:
        return StarOutcome(False, None, 1, v1)
    v2 = op(r1, r2)
    if v2 != 0:
        return StarOutcome(False, None, 2, v2)
    return StarOutcome(True, (r0, r1, r2))


def formula_diameter(t):
    a, _, c = _require_formula_member(t)
    return FORMULA.op(c, a)


def formula_strict_less(t1, t2):
    a1 = tuple(as_rational(v) for v in t1)
    a2 = tuple(as_rational(v) for v in t2)
    if a1 == a2:
        return False
    out = formula_star(a1, a2)
    zero = FORMULA.zero
    return out.defined and out.result == (zero, zero, zero)
