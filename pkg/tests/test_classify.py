from fractions import Fraction

import pytest

from dalg import (FORMULA, EnumSpec, FiniteAlgebra, SampleGrid, check_axioms,
                  check_formula_axioms, enumerate_d_algebras, is_d_transitive, is_edge,
                  truncated_order_algebra)
from dalg.classify import AXIOM_ORDER, CLASS_ORDER, FLAG_ORDER
from conftest import load_golden


class TestTable1:
    def test_class_flags(self, table1):
        rep = check_axioms(table1)
        assert rep.holds("d_algebra")
        assert rep["d_star"].witness == (1, 2)
        assert rep["edge"].witness == (1, 2)
        assert rep.holds("d_transitive")
        assert not rep.holds("bck")

    def test_d_star_witness_value(self, table1):
        # (1*2)*1 = 2*1 = 2
        assert table1.op(table1.op(1, 2), 1) == 2

    def test_json_matches_golden(self, table1):
        assert check_axioms(table1).to_json() == load_golden("table1_check.json")

    def test_reruns_are_identical(self, table1):
        a = check_axioms(table1).to_json()
        b = check_axioms(table1).to_json()
        assert a == b


class TestTruncatedOrderAlgebra:
    def test_bck_fails_with_recorded_computation(self):
        alg = truncated_order_algebra(3)
        rep = check_axioms(alg)
        assert rep["bck"].witness == (2, 0)
        assert rep["VI"].witness == (2, 0)
        assert rep.holds("V")
        # (2*(2*0))*0 = (2*1)*0 = 1*0 = 1
        assert alg.op(alg.op(2, alg.op(2, 0)), 0) == 1

    def test_edge_fails_at_two(self):
        rep = check_axioms(truncated_order_algebra(3))
        assert rep["edge"].witness == (2, 1)

    @pytest.mark.parametrize("n", range(2, 7))
    def test_always_d_transitive(self, n):
        assert is_d_transitive(truncated_order_algebra(n)).holds

    def test_n2_is_the_bck_chain(self):
        rep = check_axioms(truncated_order_algebra(2))
        assert rep.holds("bck")
        assert rep.holds("edge")


class TestFormulaReports:
    def test_grid_012(self):
        rep = check_formula_axioms(FORMULA, SampleGrid((0, 1, 2)))
        assert rep.refutation_only
        assert rep.holds("I") and rep.holds("II") and rep.holds("III")
        # minimal (IV) witness on this grid: (1*2)*1 = (-1)*1 = 2
        assert rep["IV"].witness == (Fraction(1), Fraction(2))
        assert rep["IX"].witness == (Fraction(2),)
        assert not rep.holds("d_star")
        assert rep.holds("d_algebra")

    def test_grid_023_reproduces_recorded_point(self):
        rep = check_formula_axioms(FORMULA, SampleGrid((0, 2, 3)))
        assert rep["IV"].witness == (Fraction(2), Fraction(0))
        assert FORMULA.op(FORMULA.op(2, 0), 2) == 8

    def test_edge_refuted_by_foreign_value(self):
        rep = check_formula_axioms(FORMULA, SampleGrid((0, 1, 3)))
        # first foreign value in scan order: 1*3 = 1*(1-3) = -2, outside {1, 0}
        assert rep["edge"].witness == (Fraction(1), Fraction(-2))
        assert FORMULA.op(1, 3) == -2

    def test_d_transitive_never_refuted(self):
        grid = SampleGrid.from_text("-2,-1,-1/2,0,1/2,1,2,3")
        rep = check_formula_axioms(FORMULA, grid)
        assert rep.holds("d_transitive")

    def test_witnesses_serialize_as_strings(self):
        rep = check_formula_axioms(FORMULA, SampleGrid((0, Fraction(1, 2))))
        data = rep.to_json()
        w = data["IX"]["witness"]
        assert w == ["1/2"]


class TestWitnessShapes:
    def test_free_functions_match_report(self, table1):
        rep = check_axioms(table1)
        assert is_edge(table1) == rep["edge"]
        assert is_d_transitive(table1) == rep["d_transitive"]

    def test_edge_subset_witness(self):
        # row 1 only ever reaches 0, so its value set is a proper subset of {1, 0}
        alg = FiniteAlgebra(((0, 0), (0, 0)))
        assert is_edge(alg).witness == (1,)

    def test_flag_order_is_stable(self, table1):
        assert FLAG_ORDER == AXIOM_ORDER + CLASS_ORDER
        assert tuple(check_axioms(table1).to_json()) == FLAG_ORDER

    def test_failed_flags_carry_witnesses(self, table1):
        rep = check_axioms(truncated_order_algebra(4))
        for name in FLAG_ORDER:
            fl = rep[name]
            assert fl.holds == (fl.witness is None)
        rep1 = check_axioms(table1)
        for name in FLAG_ORDER:
            fl = rep1[name]
            assert fl.holds == (fl.witness is None)


class TestClassConsequences:
    def test_bck_implies_vii_to_x(self, order3_algebras):
        hits = 0
        for alg in enumerate_d_algebras(EnumSpec(3, frozenset(("bck",)))):
            rep = check_axioms(alg)
            assert rep.holds("bck")
            for name in ("VII", "VIII", "IX", "X"):
                assert rep.holds(name), (alg.rows, name)
            hits += 1
        assert hits == sum(1 for a in order3_algebras if check_axioms(a).holds("bck"))

    @pytest.mark.parametrize("n", [3, 4])
    def test_edge_implies_unit_and_vi(self, n):
        count = 0
        for alg in enumerate_d_algebras(EnumSpec(n, frozenset(("edge",)))):
            rep = check_axioms(alg)
            assert rep.holds("IX")
            assert rep.holds("VI")
            count += 1
        assert count == (3 if n == 3 else 27)

    @pytest.mark.parametrize("n", [3, 4])
    def test_d_transitive_edge_implies_bck(self, n):
        for alg in enumerate_d_algebras(EnumSpec(n, frozenset(("edge", "d_transitive")))):
            assert check_axioms(alg).holds("bck")
