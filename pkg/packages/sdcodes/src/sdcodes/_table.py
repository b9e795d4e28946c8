"""The published s=3, m=1 classification table, and its diff against enumeration.

Rows are transcribed as printed, misprints included. Each generator is a
list of (u power, (x+1) power) terms with coefficient 1, so the rows can be
turned into spans and compared with the enumerated codes span by span.

The table has no row for the four codes of cell (a, t1, t2) = (4, 3, 1),
e.g. ⟨(x+1)^4 + u(x+1)^3 + u^2(x+1)⟩; they show up as unmatched codes.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Sequence
from dataclasses import dataclass, field

from sdcodes._duality import IdealSpan, span_build
from sdcodes._enumerate import SelfDualCode
from sdcodes._field import FieldCtx, field_ctx
from sdcodes._ring import RingPoly

TABLE_S = 3
TABLE_M = 1

Term = tuple[int, int]
Generator = tuple[Term, ...]


@dataclass(frozen=True, slots=True)
class TableRow:
    """One printed row.

    Attributes:
        h1: Group label of the row ("-", "h1=0" or "h1 unit").
        type_tag: Printed type.
        generators: Generators as (u power, (x+1) power) terms.
        text: The code as printed.
    """

    h1: str
    type_tag: int
    generators: tuple[Generator, ...]
    text: str

    def ring_generators(self, ctx: FieldCtx) -> list[RingPoly]:
        gens = []
        for generator in self.generators:
            g = RingPoly.zero(ctx, TABLE_S)
            for u_power, y_power in generator:
                g = g + RingPoly.term(ctx, TABLE_S, u_power, y_power)
            gens.append(g)
        return gens

    def span(self, ctx: FieldCtx) -> IdealSpan:
        return span_build(ctx, TABLE_S, self.ring_generators(ctx))


def _row(h1: str, type_tag: int, text: str, *generators: Sequence[Term]) -> TableRow:
    return TableRow(h1, type_tag, tuple(tuple(g) for g in generators), text)


_U4 = ((1, 4),)

TABLE1_ROWS: tuple[TableRow, ...] = (
    _row("-", 4, "⟨u(x+1)^4, u^2⟩", [(1, 4)], [(2, 0)]),
    # h1 = 0, type 5
    _row("h1=0", 5, "⟨(x+1)^4⟩", [(0, 4)]),
    _row("h1=0", 5, "⟨(x+1)^4+u^2⟩", [(0, 4), (2, 0)]),
    _row("h1=0", 5, "⟨(x+1)^4+u^2(x+1)^2⟩", [(0, 4), (2, 2)]),
    _row("h1=0", 5, "⟨(x+1)^4+u^2(x+1)^3⟩", [(0, 4), (2, 3)]),
    _row("h1=0", 5, "⟨(x+1)^4+u^2(1+(x+1)^2)⟩", [(0, 4), (2, 0), (2, 2)]),
    _row("h1=0", 5, "⟨(x+1)^4+u^2(1+(x+1)^3)⟩", [(0, 4), (2, 0), (2, 3)]),
    _row("h1=0", 5, "⟨(x+1)^4+u^2(x+1)^2(1+(x+1))⟩", [(0, 4), (2, 2), (2, 3)]),
    _row("h1=0", 5, "⟨(x+1)^4+u^2(1+(x+1)+(x+1)^3)⟩", [(0, 4), (2, 0), (2, 1), (2, 3)]),
    # h1 = 0, type 7
    _row("h1=0", 7, "⟨(x+1)^6+u^2, u(x+1)^4, u^2(x+1)^2⟩", [(0, 6), (2, 0)], _U4, [(2, 2)]),
    _row("h1=0", 7, "⟨(x+1)^7+u^2, u(x+1)^4, u^2(x+1)⟩", [(0, 7), (2, 0)], _U4, [(2, 1)]),
    # h1 = 0, type 8
    _row("h1=0", 8, "⟨(x+1)^5, u(x+1)^4, u^2(x+1)^3⟩", [(0, 5)], _U4, [(2, 3)]),
    _row("h1=0", 8, "⟨(x+1)^5+u^2(x+1), u(x+1)^4, u^2(x+1)^3⟩", [(0, 5), (2, 1)], _U4, [(2, 3)]),
    _row(
        "h1=0", 8, "⟨(x+1)^5+u^2(x+1)^2, u(x+1)^4, u^2(x+1)^3⟩", [(0, 5), (2, 2)], _U4, [(2, 3)]
    ),
    _row(
        "h1=0",
        8,
        "⟨(x+1)^5+u^2(x+1)(1+(x+1)), u(x+1)^4, u^2(x+1)^3⟩",
        [(0, 5), (2, 1), (2, 2)],
        _U4,
        [(2, 3)],
    ),
    _row("h1=0", 8, "⟨(x+1)^6, u(x+1)^4, u^2(x+1)^2⟩", [(0, 6)], _U4, [(2, 2)]),
    _row("h1=0", 8, "⟨(x+1)^5+u^2(x+1), u(x+1)^4, u^2(x+1)^2⟩", [(0, 5), (2, 1)], _U4, [(2, 2)]),
    _row(
        "h1=0",
        8,
        "⟨(x+1)^6+u^2(1+(x+1)), u(x+1)^4, u^2(x+1)^2⟩",
        [(0, 6), (2, 0), (2, 1)],
        _U4,
        [(2, 2)],
    ),
    _row("h1=0", 8, "⟨(x+1)^7, u(x+1)^4, u^2(x+1)⟩", [(0, 7)], _U4, [(2, 1)]),
    # h1 unit, printed as type 7
    _row(
        "h1 unit", 7, "⟨(x+1)^4+u(x+1)^3+u^2(1+(x+1))⟩", [(0, 4), (1, 3), (2, 0), (2, 1)]
    ),
    _row(
        "h1 unit",
        7,
        "⟨(x+1)^4+u(x+1)^3+u^2(1+(x+1)+(x+1)^2)⟩",
        [(0, 4), (1, 3), (2, 0), (2, 1), (2, 2)],
    ),
    _row(
        "h1 unit",
        7,
        "⟨(x+1)^4+u(x+1)^3+u^2(1+(x+1)+(x+1)^3)⟩",
        [(0, 4), (1, 3), (2, 0), (2, 1), (2, 3)],
    ),
    _row(
        "h1 unit",
        7,
        "⟨(x+1)^4+u(x+1)^3+u^2(1+(x+1)+(x+1)^2+(x+1)^3)⟩",
        [(0, 4), (1, 3), (2, 0), (2, 1), (2, 2), (2, 3)],
    ),
    _row(
        "h1 unit",
        7,
        "⟨(x+1)^5+u(x+1)^3+u^2, (x+1)^4+u^2(x+1)^2, u^2(x+1)^3⟩",
        [(0, 5), (1, 3), (2, 0)],
        [(0, 4), (2, 2)],
        [(2, 3)],
    ),
    _row(
        "h1 unit",
        7,
        "⟨(x+1)^5+u(x+1)^3+u^2(1+(1+x)), (x+1)^4+u^2(x+1)^2, u^2(x+1)^3⟩",
        [(0, 5), (1, 3), (2, 0), (2, 1)],
        [(0, 4), (2, 2)],
        [(2, 3)],
    ),
    _row(
        "h1 unit",
        7,
        "⟨(x+1)^5+u(x+1)^3+u^2(1+(1+x)^2), (x+1)^4+u^2(x+1)^2, u^2(x+1)^3⟩",
        [(0, 5), (1, 3), (2, 0), (2, 2)],
        [(0, 4), (2, 2)],
        [(2, 3)],
    ),
    _row(
        "h1 unit",
        7,
        "⟨(x+1)^5+u(x+1)^3+u^2(1+(1+x)+(1+x)^2), (x+1)^4+u^2(x+1)^2, u^2(x+1)^3⟩",
        [(0, 5), (1, 3), (2, 0), (2, 1), (2, 2)],
        [(0, 4), (2, 2)],
        [(2, 3)],
    ),
)


_GROUPS = ("-", "h1=0", "h1 unit")


def printed_split() -> tuple[int, int, int]:
    """Rows per group as printed: type 4, h1 = 0, h1 unit."""
    counts = Counter(row.h1 for row in TABLE1_ROWS)
    return counts[_GROUPS[0]], counts[_GROUPS[1]], counts[_GROUPS[2]]


@dataclass(slots=True)
class TableDiff:
    """Where the printed table and the enumeration part ways.

    Attributes:
        unmatched_rows: Printed rows whose ideal no enumerated code generates.
        unmatched_codes: Enumerated codes missing from the table.
        type_mismatches: Matching pairs whose type labels differ.
    """

    unmatched_rows: list[TableRow] = field(default_factory=list)
    unmatched_codes: list[SelfDualCode] = field(default_factory=list)
    type_mismatches: list[tuple[TableRow, SelfDualCode]] = field(default_factory=list)

    @property
    def empty(self) -> bool:
        return not (self.unmatched_rows or self.unmatched_codes or self.type_mismatches)


def table1_diff(codes: Sequence[SelfDualCode], ctx: FieldCtx | None = None) -> TableDiff:
    """Match table rows to codes by span."""
    ctx = ctx or field_ctx(TABLE_M)
    by_span = {code.span(): code for code in codes}
    diff = TableDiff()
    matched: set[IdealSpan] = set()
    for row in TABLE1_ROWS:
        span = row.span(ctx)
        code = by_span.get(span)
        if code is None:
            diff.unmatched_rows.append(row)
            continue
        matched.add(span)
        if code.spec.type_tag != row.type_tag:
            diff.type_mismatches.append((row, code))
    diff.unmatched_codes = [code for span, code in by_span.items() if span not in matched]
    return diff
