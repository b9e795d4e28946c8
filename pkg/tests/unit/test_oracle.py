"""Tests for the brute-force oracles."""

import numpy as np
import pytest

from sdcodes import (
    BRANCH_LABELS,
    CodeSpec,
    FieldCtx,
    RingPoly,
    branch_labels,
    enumerate_all,
    field_ctx,
    oracle_check,
    oracle_dual_consistency,
    oracle_exhaustive,
    sample_specs,
    selfdual_type4,
    verify_generators,
)
from sdcodes_core import BudgetExceededError


def test_verify_type4(gf2: FieldCtx):
    """The type-4 code passes every check."""
    spec = selfdual_type4(3, ctx=gf2)
    gens = [RingPoly.term(gf2, 3, 1, 4), RingPoly.term(gf2, 3, 2)]
    report = verify_generators(gf2, 3, gens, "type4")
    assert report.self_dual
    assert report.dual_consistent
    assert report.consistent
    assert report.torsion_span is not None
    assert report.torsion_span.as_tuple() == (8, 4, 0)
    assert oracle_check(spec).consistent


def test_verify_whole_ring(gf2: FieldCtx):
    """⟨1⟩ is dual-consistent but not self-dual."""
    report = verify_generators(gf2, 2, [RingPoly.one(gf2, 2)], "ring")
    assert not report.self_dual
    assert report.dual_consistent
    assert report.to_dict()["id"] == "ring"


def test_report_dict_keys(gf2: FieldCtx):
    """JSON keys are stable."""
    report = oracle_check(selfdual_type4(2, ctx=gf2), "t4")
    assert set(report.to_dict()) == {
        "id",
        "self_dual",
        "dual_consistent",
        "struct_span",
        "struct_formula",
        "torsion_span",
        "torsion_formula",
        "discrepancies",
    }


def test_enumerated_codes_pass_oracle():
    """Three-generator codes agree on torsion and are self-dual."""
    codes, _ = enumerate_all(3, 1)
    for code in codes:
        report = oracle_check(code.spec, str(code.cell))
        assert report.self_dual, code.cell
        assert report.consistent, report.discrepancies


def test_branch_labels(gf2: FieldCtx):
    """Labels come from the V formula for types 5/6 and W for types 7/8."""
    plain = CodeSpec(type_tag=5, s=2, ctx=gf2, a=2)
    assert branch_labels(plain) == ("V1",)
    assert branch_labels(CodeSpec(type_tag=4, s=2, ctx=gf2, a=1, c=0)) == ()
    seven = CodeSpec(type_tag=7, s=2, ctx=gf2, a=2, b=1)
    assert branch_labels(seven) == ("W1",)


def test_sampler_covers_every_branch(gf2: FieldCtx, rng: np.random.Generator):
    """All V and W cases plus the β sub-cases are hit at s = 3."""
    result = sample_specs(gf2, 3, 100, rng)
    assert result.missing == set()
    assert result.covered == set(BRANCH_LABELS)
    assert len(result.samples) >= 100


def test_structure_degrees_match_spans(gf2: FieldCtx, rng: np.random.Generator):
    """Span minima equal the closed forms on a branch-covering sample."""
    result = sample_specs(gf2, 3, 100, rng)
    for i, spec in enumerate(result.samples):
        report = oracle_check(spec, f"sample-{i}")
        assert report.consistent, (spec, report.discrepancies)
        assert report.struct_span == report.struct_formula


@pytest.mark.parametrize("m", [1, pytest.param(2, marks=pytest.mark.slow)])
def test_dual_consistency_on_samples(m: int, rng: np.random.Generator):
    """Both duals agree and torsion dualizes on 200 random specs."""
    result = sample_specs(field_ctx(m), 3, 200, rng)
    assert all(oracle_dual_consistency(spec) for spec in result.samples[:200])


def test_exhaustive_s1():
    """Three self-dual ideals of length 2, the same as the enumeration."""
    found = oracle_exhaustive(1, 1)
    codes, _ = enumerate_all(1, 1)
    assert len(found) == 3
    assert found == {code.span() for code in codes}


@pytest.mark.slow
def test_exhaustive_s2():
    """Seven self-dual ideals of length 4: 1 + 6 + 0."""
    found = oracle_exhaustive(2, 1)
    codes, _ = enumerate_all(2, 1)
    assert len(found) == 7
    assert found == {code.span() for code in codes}


def test_exhaustive_budget():
    """Sizes past the caps are refused."""
    with pytest.raises(BudgetExceededError):
        oracle_exhaustive(3, 1)
    with pytest.raises(BudgetExceededError):
        oracle_exhaustive(1, 2)
    with pytest.raises(BudgetExceededError):
        oracle_exhaustive(1, 1, max_spans=1)
