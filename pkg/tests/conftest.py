import json
from pathlib import Path

import pytest

from dalg import EnumSpec, FiniteAlgebra, enumerate_d_algebras, parse_table

DATA = Path(__file__).parent / "data"
GOLDEN = Path(__file__).parent / "golden"

# the table in data/table1.tbl, for tests that build it directly
TABLE1_ROWS = (
    (0, 0, 0, 0, 0),
    (1, 0, 2, 0, 4),
    (2, 2, 0, 3, 0),
    (3, 3, 3, 0, 3),
    (4, 4, 4, 1, 0),
)


def load_golden(name):
    return json.loads((GOLDEN / name).read_text(encoding="utf-8"))


@pytest.fixture(scope="session")
def table1_path():
    return DATA / "table1.tbl"


@pytest.fixture(scope="session")
def table1(table1_path):
    return parse_table(table1_path.read_bytes())


@pytest.fixture(scope="session")
def chain2():
    return FiniteAlgebra(((0, 0), (1, 0)))


@pytest.fixture(scope="session")
def order2_algebras():
    return list(enumerate_d_algebras(EnumSpec(2)))


@pytest.fixture(scope="session")
def order3_algebras():
    return list(enumerate_d_algebras(EnumSpec(3)))
