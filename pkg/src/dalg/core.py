"""Carrier structures: finite operation tables and the exact-rational formula algebra.

Everything here is an immutable value after construction, so instances are
safe to share between threads and to use as dict keys.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

_TOKEN = re.compile(r"\S+")


class TblParseError(ValueError):
    """Malformed .tbl input, carrying the 1-based line (and column) of the problem."""

    def __init__(self, message, line, column=None):
        self.line = line
        self.column = column
        where = f"line {line}" if column is None else f"line {line}, column {column}"
        super().__init__(f"{where}: {message}")


@dataclass(frozen=True)
class FiniteAlgebra:
    """A binary operation on {0, .., n-1} given by its full table, with constant 0.

    No axioms are assumed; an arbitrary table is representable and
    classification is a separate step.
    """

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        n = len(rows)
        if n < 1:
            raise ValueError("carrier must have at least one element")
        for r in rows:
            if len(r) != n:
                raise ValueError(f"table is not square: row of length {len(r)} in a size-{n} table")
            for v in r:
                if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < n:
                    raise ValueError(f"table entry {v!r} out of range [0, {n})")

    @property
    def n(self):
        return len(self.rows)

    @property
    def zero(self):
        return 0

    def _check_element(self, x):
        if not isinstance(x, int) or isinstance(x, bool) or not 0 <= x < len(self.rows):
            raise ValueError(f"element {x!r} out of range for carrier of size {len(self.rows)}")

    def op(self, x, y):
        self._check_element(x)
        self._check_element(y)
        return self.rows[x][y]

    def leq(self, x, y):
        return self.op(x, y) == 0


def op_eval(alg, x, y):
    """Evaluate x*y in either kind of carrier."""
    return alg.op(x, y)


def leq(alg, x, y):
    """The basic relation: x <= y exactly when x*y is the constant."""
    return alg.leq(x, y)


def parse_table(text):
    """Parse the .tbl format into a FiniteAlgebra.

    Comment lines start with '#'; blank lines are ignored. The first
    significant line holds the carrier size n, followed by exactly n rows of
    n entries in [0, n).
    """
    if isinstance(text, (bytes, bytearray)):
        text = text.decode("utf-8")
    n = None
    rows = []
    last_line = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        last_line = lineno
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        tokens = list(_TOKEN.finditer(raw))
        if n is None:
            if len(tokens) > 1:
                raise TblParseError("unexpected token after table size", lineno, tokens[1].start() + 1)
            tok = tokens[0]
            try:
                n = int(tok.group())
            except ValueError:
                raise TblParseError(f"table size must be an integer, got {tok.group()!r}", lineno,
                                    tok.start() + 1) from None
            if n < 1:
                raise TblParseError("table size must be at least 1", lineno, tok.start() + 1)
            continue
        if len(rows) == n:
            raise TblParseError("unexpected content after the table", lineno, tokens[0].start() + 1)
        if len(tokens) != n:
            col = tokens[n].start() + 1 if len(tokens) > n else None
            raise TblParseError(f"expected {n} entries in row {len(rows)}, found {len(tokens)}",
                                lineno, col)
        row = []
        for tok in tokens:
            try:
                v = int(tok.group())
            except ValueError:
                raise TblParseError(f"entry is not an integer: {tok.group()!r}", lineno,
                                    tok.start() + 1) from None
            if not 0 <= v < n:
                raise TblParseError(f"entry {v} out of range [0, {n})", lineno, tok.start() + 1)
            row.append(v)
        rows.append(tuple(row))
    if n is None:
        raise TblParseError("missing table size header", max(last_line, 1))
    if len(rows) != n:
        raise TblParseError(f"expected {n} rows, found {len(rows)}", max(last_line, 1))
    return FiniteAlgebra(tuple(rows))


def emit_table(alg):
    """Canonical .tbl emission: size line, then rows joined by single spaces."""
    lines = [str(alg.n)]
    lines.extend(" ".join(str(v) for v in row) for row in alg.rows)
    return "\n".join(lines) + "\n"


def truncated_order_algebra(n):
    """The 0/1-valued table on {0..n-1}: x*y = 0 if x <= y, else 1.

    Closed for every n >= 2 because all outputs lie in {0, 1}.
    """
    if n < 2:
        raise ValueError("truncated order algebra needs n >= 2")
    rows = tuple(tuple(0 if x <= y else 1 for y in range(n)) for x in range(n))
    return FiniteAlgebra(rows)


def as_rational(x):
    """Coerce to an exact Fraction, rejecting floats outright."""
    if isinstance(x, float):
        raise TypeError("exact rational required, floats are not accepted")
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int) and not isinstance(x, bool):
        return Fraction(x)
    raise TypeError(f"exact rational required, got {type(x).__name__}")


def parse_rational(text):
    """Parse '3', '-5/2' or '2.5' into an exact Fraction."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational number: {text!r}") from exc


class FormulaAlgebra:
    """x*y = x*(x - y) over exact rationals.

    The carrier is infinite, so checks against it are refutation-only and
    run over a SampleGrid. All arithmetic is exact; floats are rejected.
    """

    zero = Fraction(0)

    @staticmethod
    def op(x, y):
        a = as_rational(x)
        b = as_rational(y)
        return a * (a - b)

    @staticmethod
    def leq(x, y):
        return FormulaAlgebra.op(x, y) == 0

    def __repr__(self):
        return "FormulaAlgebra(x*y = x*(x-y))"


FORMULA = FormulaAlgebra()


@dataclass(frozen=True)
class SampleGrid:
    """A finite probe set of distinct exact rationals, always containing 0.

    Values are kept sorted ascending so scan order (and hence reported
    witnesses) never depends on input order.
    """

    values: tuple[Fraction, ...]

    def __post_init__(self):
        vals = sorted(as_rational(v) for v in self.values)
        for a, b in zip(vals, vals[1:]):
            if a == b:
                raise ValueError(f"duplicate grid value {a}")
        if Fraction(0) not in vals:
            raise ValueError("grid must contain 0")
        object.__setattr__(self, "values", tuple(vals))

    @classmethod
    def from_text(cls, text):
        """Build a grid from a comma-separated list like '0,1,-2,5/2'."""
        parts = [p for p in (s.strip() for s in text.split(",")) if p]
        if not parts:
            raise ValueError("empty grid")
        return cls(tuple(parse_rational(p) for p in parts))

    def __iter__(self):
        return iter(self.values)

    def __len__(self):
        return len(self.values)
