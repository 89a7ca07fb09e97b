from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dalg import (FORMULA, FiniteAlgebra, SampleGrid, TblParseError, emit_table, leq,
                  op_eval, parse_rational, parse_table, truncated_order_algebra)
from conftest import TABLE1_ROWS


def algebras(max_n=5):
    return st.integers(1, max_n).flatmap(
        lambda n: st.tuples(*[st.tuples(*[st.integers(0, n - 1)] * n)] * n)
    ).map(FiniteAlgebra)


def rationals():
    return st.fractions(max_denominator=50)


class TestFiniteAlgebra:
    def test_table1_parses(self, table1):
        assert table1.n == 5
        assert table1.rows == TABLE1_ROWS

    def test_op_and_leq(self, table1):
        assert table1.op(1, 2) == 2
        assert op_eval(table1, 1, 2) == 2
        assert leq(table1, 1, 3)
        assert all(leq(table1, x, x) for x in range(5))
        assert not leq(table1, 3, 1)

    def test_out_of_range_elements(self, table1):
        with pytest.raises(ValueError):
            table1.op(5, 0)
        with pytest.raises(ValueError):
            table1.op(0, -1)

    def test_rejects_bad_tables(self):
        with pytest.raises(ValueError):
            FiniteAlgebra(((0, 0), (1,)))
        with pytest.raises(ValueError):
            FiniteAlgebra(((0, 2), (1, 0)))
        with pytest.raises(ValueError):
            FiniteAlgebra(())


class TestTblFormat:
    def test_singleton(self):
        alg = parse_table("1\n0\n")
        assert alg.rows == ((0,),)

    def test_comments_and_blank_lines(self):
        text = "# header\n\n2\n# interlude\n0 0\n1 0\n# trailer\n"
        assert parse_table(text).rows == ((0, 0), (1, 0))

    def test_round_trip_table1(self, table1):
        assert parse_table(emit_table(table1)) == table1

    @given(algebras())
    def test_round_trip_any_table(self, alg):
        text = emit_table(alg)
        assert parse_table(text) == alg
        assert emit_table(parse_table(text)) == text

    def test_out_of_range_entry_has_position(self):
        text = "5\n0 0 0 0 0\n1 0 2 0 4\n2 2 7 3 0\n3 3 3 0 3\n4 4 4 1 0\n"
        with pytest.raises(TblParseError) as exc:
            parse_table(text)
        assert exc.value.line == 4
        assert exc.value.column == 5
        assert "7" in str(exc.value)

    @pytest.mark.parametrize("text,line", [
        ("", 1),
        ("x\n", 1),
        ("0\n", 1),
        ("2\n0 0\n", 2),
        ("2\n0 0\n1 0\n0 0\n", 4),
        ("2\n0 y\n1 0\n", 2),
        ("2 2\n0 0\n1 0\n", 1),
        ("2\n0 0 0\n1 0\n", 2),
    ])
    def test_malformed_inputs(self, text, line):
        with pytest.raises(TblParseError) as exc:
            parse_table(text)
        assert exc.value.line == line

    def test_bytes_input(self, table1_path, table1):
        assert parse_table(table1_path.read_bytes()) == table1


class TestTruncatedOrderAlgebra:
    def test_rows_n3(self):
        assert truncated_order_algebra(3).rows == ((0, 0, 0), (1, 0, 0), (1, 1, 0))

    @pytest.mark.parametrize("n", range(2, 7))
    def test_leq_matches_integer_order(self, n):
        alg = truncated_order_algebra(n)
        for x in range(n):
            for y in range(n):
                assert alg.leq(x, y) == (x <= y)

    def test_needs_two_elements(self):
        with pytest.raises(ValueError):
            truncated_order_algebra(1)


class TestFormulaAlgebra:
    def test_paper_values(self):
        assert FORMULA.op(2, 0) == 4
        assert FORMULA.op(1, 2) == -1
        assert not FORMULA.leq(3, 0)
        assert FORMULA.leq(Fraction(5, 2), Fraction(5, 2))

    def test_exact_rationals_only(self):
        with pytest.raises(TypeError):
            FORMULA.op(0.5, 1)
        with pytest.raises(TypeError):
            FORMULA.op(1, "1")

    @given(rationals())
    def test_identity_axioms(self, x):
        assert FORMULA.op(x, x) == 0
        assert FORMULA.op(0, x) == 0

    @given(rationals())
    def test_square_on_zero(self, x):
        assert FORMULA.op(x, 0) == x * x


class TestSampleGrid:
    def test_sorts_and_keeps_exact_values(self):
        grid = SampleGrid((2, 0, Fraction(-1, 2)))
        assert grid.values == (Fraction(-1, 2), Fraction(0), Fraction(2))

    def test_requires_zero(self):
        with pytest.raises(ValueError):
            SampleGrid((1, 2))

    def test_rejects_duplicates(self):
        with pytest.raises(ValueError):
            SampleGrid((0, 1, Fraction(2, 2)))

    def test_rejects_floats(self):
        with pytest.raises(TypeError):
            SampleGrid((0, 0.5))

    def test_from_text(self):
        grid = SampleGrid.from_text("0, 1, -5/2")
        assert grid.values == (Fraction(-5, 2), Fraction(0), Fraction(1))
        with pytest.raises(ValueError):
            SampleGrid.from_text("  ")


def test_parse_rational():
    assert parse_rational("5/2") == Fraction(5, 2)
    assert parse_rational("-3") == Fraction(-3)
    assert parse_rational("2.5") == Fraction(5, 2)
    with pytest.raises(ValueError):
        parse_rational("a/b")
