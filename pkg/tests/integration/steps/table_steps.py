"""Step definitions for counting and table features."""

from collections import Counter

from pytest_bdd import parsers, then, when

from sdcodes import count_N, count_Nprime, is_self_dual, table1_diff
from tests.integration.steps.common import parse_datatable


@when(parsers.parse("I count the self-dual codes of length 2^{s:d}"))
def count_codes(test_context, s):
    """Evaluate the closed-form counts."""
    ctx = test_context["ctx"]
    report = count_Nprime(s, ctx.m, ctx=ctx)
    report.count_type4 = 1
    report.count_N = count_N(s, ctx.m)
    test_context["report"] = report


@when("I compare the codes with the printed table")
def compare_with_table(test_context):
    """Diff the enumeration against the printed rows."""
    test_context["diff"] = table1_diff(test_context["codes"], test_context["ctx"])


@then(parsers.parse("N should be {expected:d}"))
def verify_n(test_context, expected):
    """Check the h1 = 0 count."""
    assert test_context["report"].count_N == expected


@then(parsers.parse("N' should be {expected:d}"))
def verify_nprime(test_context, expected):
    """Check the h1-unit count."""
    assert test_context["report"].count_Nprime == expected


@then(parsers.parse("the total should be {expected:d}"))
def verify_total(test_context, expected):
    """Check 1 + N + N'."""
    assert test_context["report"].total == expected


@then("the number of codes should equal 1 + N + N'")
def verify_enumerated_total(test_context):
    """The enumeration produced exactly the counted codes."""
    report = test_context["report"]
    assert len(test_context["codes"]) == 1 + report.count_N + report.count_Nprime


@then("every enumerated code should be self-dual")
def verify_all_self_dual(test_context):
    """Each code equals its dual."""
    assert all(is_self_dual(code.span()) for code in test_context["codes"])


@then("the cells should be")
def verify_cells(test_context, datatable):
    """Per-cell τ matches the table."""
    expected = {
        (int(row["a"]), int(row["t1"]), int(row["t2"])): int(row["tau"])
        for row in parse_datatable(datatable)
    }
    assert test_context["report"].cell_totals() == expected


@then("the family split should be")
def verify_family_split(test_context, datatable):
    """Codes per family."""
    expected = {row["family"]: int(row["count"]) for row in parse_datatable(datatable)}
    split = Counter(code.family.value for code in test_context["codes"])
    assert dict(split) == expected


@then(parsers.parse("{count:d} printed rows should match no code"))
def verify_unmatched_rows(test_context, count):
    """Rows with no enumerated span."""
    assert len(test_context["diff"].unmatched_rows) == count


@then(parsers.parse("{count:d} codes should match no printed row"))
def verify_unmatched_codes(test_context, count):
    """Codes missing from the table."""
    assert len(test_context["diff"].unmatched_codes) == count


@then(parsers.parse("{count:d} matched rows should carry a different type label"))
def verify_type_mismatches(test_context, count):
    """Label disagreements among matched rows."""
    assert len(test_context["diff"].type_mismatches) == count


@then("every unmatched code should be self-dual")
def verify_unmatched_self_dual(test_context):
    """Codes the table lacks are still genuine."""
    assert all(is_self_dual(code.span()) for code in test_context["diff"].unmatched_codes)


@then("the unmatched h1-unit codes should lie in cells")
def verify_unmatched_cells(test_context, datatable):
    """Where the missing h1-unit codes come from."""
    expected = {
        (int(row["a"]), int(row["t2"])): int(row["count"]) for row in parse_datatable(datatable)
    }
    cells = Counter(
        (code.cell[0], code.cell[2])
        for code in test_context["diff"].unmatched_codes
        if code.family.value == "h1unit"
    )
    assert dict(cells) == expected
