"""Finite d-algebras, their triple normalizer construction, and exhaustive
verification of the recorded statements about both."""

from dalg.classify import (AxiomReport, Flag, check_axioms, check_formula_axioms,
                           is_d_transitive, is_edge)
from dalg.core import (FORMULA, FiniteAlgebra, FormulaAlgebra, SampleGrid, TblParseError,
                       as_rational, emit_table, leq, op_eval, parse_rational, parse_table,
                       truncated_order_algebra)
from dalg.enumeration import EnumSpec, canonical_form, count_closed_form, enumerate_d_algebras
from dalg.nabla import (NormalizerAlgebra, StarOutcome, build_normalizer, epsilon,
                        formula_diameter, formula_star, formula_strict_less,
                        membership_by_family, membership_by_products,
                        rational_nabla_membership)
from dalg.order import (PosetReport, Relation, check_poset, hasse_cover, induce_bck,
                        order_relation, reflexive_transitive_closure)
from dalg.verify import (REGISTRY, Universe, Verdict, statement_ids, verify_all,
                         verify_statement, verify_statements)

__version__ = "0.1.0"
