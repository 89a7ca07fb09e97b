import itertools
import random

import pytest

from dalg import (EnumSpec, FiniteAlgebra, canonical_form, check_axioms, count_closed_form,
                  enumerate_d_algebras, truncated_order_algebra)
from dalg.enumeration import _bck_ok, _dstar_ok, _dtrans_ok, _edge_ok


def naive_d_algebras(n):
    """Reference oracle: every n^(n^2) table, filtered by the full axiom report."""
    out = []
    for combo in itertools.product(range(n), repeat=n * n):
        rows = tuple(combo[i * n:(i + 1) * n] for i in range(n))
        alg = FiniteAlgebra(rows)
        if check_axioms(alg).holds("d_algebra"):
            out.append(alg)
    return out


class TestCounts:
    def test_order2(self, order2_algebras):
        assert len(order2_algebras) == 1
        assert order2_algebras[0].rows == ((0, 0), (1, 0))
        assert [a.rows for a in order2_algebras] == [a.rows for a in naive_d_algebras(2)]

    def test_order3_matches_naive_oracle(self, order3_algebras):
        assert len(order3_algebras) == 32
        assert [a.rows for a in order3_algebras] == [a.rows for a in naive_d_algebras(3)]

    @pytest.mark.parametrize("n,count", [(2, 1), (3, 32), (4, 91125), (5, 48922361856)])
    def test_closed_form(self, n, count):
        assert count_closed_form(n) == count

    def test_order4_count_matches_closed_form(self):
        assert sum(1 for _ in enumerate_d_algebras(EnumSpec(4))) == count_closed_form(4)

    def test_spec_validation(self):
        with pytest.raises(ValueError):
            EnumSpec(1)
        with pytest.raises(ValueError):
            EnumSpec(6)
        with pytest.raises(ValueError):
            EnumSpec(3, frozenset(("commutative",)))
        with pytest.raises(ValueError):
            count_closed_form(1)


class TestFilters:
    @pytest.mark.parametrize("name,flag", [("bck", "bck"), ("d_star", "d_star"),
                                           ("edge", "edge"), ("d_transitive", "d_transitive")])
    def test_order3_filters_match_classify(self, name, flag, order3_algebras):
        filtered = [a.rows for a in enumerate_d_algebras(EnumSpec(3, frozenset((name,))))]
        expected = [a.rows for a in order3_algebras if check_axioms(a).holds(flag)]
        assert filtered == expected

    def test_order4_edge_count(self):
        algs = list(enumerate_d_algebras(EnumSpec(4, frozenset(("edge",)))))
        assert len(algs) == 27
        assert all(check_axioms(a).holds("edge") for a in algs)

    def test_order4_filter_sample_agrees_with_classify(self):
        rng = random.Random(7)
        sample = [a for a in enumerate_d_algebras(EnumSpec(4)) if rng.random() < 0.01]
        for alg in sample:
            rep = check_axioms(alg)
            assert _edge_ok(alg.rows, 4) == rep.holds("edge")
            assert _dtrans_ok(alg.rows, 4) == rep.holds("d_transitive")
            assert _dstar_ok(alg.rows, 4) == rep.holds("d_star")
            assert _bck_ok(alg.rows, 4) == (rep.holds("V") and rep.holds("VI"))

    def test_fast_predicates_on_known_algebras(self, table1):
        for alg in (table1, truncated_order_algebra(4), truncated_order_algebra(6)):
            rep = check_axioms(alg)
            n = alg.n
            assert _edge_ok(alg.rows, n) == rep.holds("edge")
            assert _dtrans_ok(alg.rows, n) == rep.holds("d_transitive")
            assert _dstar_ok(alg.rows, n) == rep.holds("d_star")

    def test_combined_filters(self):
        both = [a.rows for a in
                enumerate_d_algebras(EnumSpec(4, frozenset(("edge", "d_transitive"))))]
        edge_only = [a.rows for a in enumerate_d_algebras(EnumSpec(4, frozenset(("edge",))))]
        assert both == [r for r in edge_only if _dtrans_ok(r, 4)]


class TestCanonicalForm:
    def test_idempotent(self, order3_algebras):
        for alg in order3_algebras:
            cf = canonical_form(alg)
            assert canonical_form(cf) == cf
            assert cf.rows <= alg.rows

    def test_order2_fixed_point(self, order2_algebras):
        alg = order2_algebras[0]
        assert canonical_form(alg) == alg

    def test_relabelled_tables_share_canonical_form(self, order3_algebras):
        swap = {0: 0, 1: 2, 2: 1}
        for alg in order3_algebras:
            relabelled = [[0] * 3 for _ in range(3)]
            for x in range(3):
                for y in range(3):
                    relabelled[swap[x]][swap[y]] = swap[alg.rows[x][y]]
            other = FiniteAlgebra(tuple(tuple(r) for r in relabelled))
            assert canonical_form(other) == canonical_form(alg)

    def test_class_flags_are_isomorphism_invariant(self, order3_algebras):
        names = ("I", "II", "III", "IV", "V", "VI", "edge", "d_transitive")
        for alg in order3_algebras:
            a = check_axioms(alg)
            b = check_axioms(canonical_form(alg))
            for name in names:
                assert a.holds(name) == b.holds(name)

    def test_iso_reduction_emits_canonical_representatives(self, order3_algebras):
        reduced = list(enumerate_d_algebras(EnumSpec(3, iso_reduce=True)))
        assert all(canonical_form(a) == a for a in reduced)
        expected = sorted({canonical_form(a).rows for a in order3_algebras})
        assert [a.rows for a in reduced] == expected


class TestDeterminism:
    def test_stream_is_reproducible(self):
        a = [alg.rows for alg in enumerate_d_algebras(EnumSpec(3))]
        b = [alg.rows for alg in enumerate_d_algebras(EnumSpec(3))]
        assert a == b

    def test_parallel_stream_matches_serial(self):
        serial = [alg.rows for alg in enumerate_d_algebras(EnumSpec(3))]
        parallel = [alg.rows for alg in enumerate_d_algebras(EnumSpec(3), jobs=2)]
        assert serial == parallel

    def test_parallel_stream_matches_serial_with_filters(self):
        spec = EnumSpec(4, frozenset(("edge",)))
        serial = [alg.rows for alg in enumerate_d_algebras(spec)]
        parallel = [alg.rows for alg in enumerate_d_algebras(spec, jobs=3)]
        assert serial == parallel

    def test_stream_is_sorted(self, order3_algebras):
        rows = [a.rows for a in order3_algebras]
        assert rows == sorted(rows)
