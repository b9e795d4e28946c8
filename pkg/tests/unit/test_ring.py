"""Tests for ring elements, code specs and the closed-form degrees."""

import numpy as np
import pytest

from sdcodes import (
    CodeForm,
    CodeSpec,
    FieldCtx,
    IdealSpan,
    KPoly,
    RingPoly,
    TorsionProfile,
    code_make,
    format_generators,
    format_rpoly,
    generators,
    mu_reduce,
    principal_generators,
    rpoly_mul,
    span_build,
    struct_degrees,
    struct_L_U,
    torsion_profile,
    type7_generators,
    v_branch,
    validate,
    violations,
    w_branch,
)
from sdcodes_core import DimensionError, ValidationError


def test_u_cubed_vanishes(gf2: FieldCtx):
    """u·u² = 0 in R."""
    u = RingPoly.term(gf2, 2, 1)
    u2 = RingPoly.term(gf2, 2, 2)
    assert (u * u2).is_zero()
    assert u * u == u2


def test_u_times(gf2: FieldCtx):
    """Multiplying by u moves each part up one slot."""
    f = RingPoly.term(gf2, 2, 0, 1) + RingPoly.term(gf2, 2, 1, 3)
    assert f.u_times() == RingPoly.term(gf2, 2, 1, 1) + RingPoly.term(gf2, 2, 2, 3)
    assert f.u_times() == RingPoly.term(gf2, 2, 1) * f


def test_product_is_commutative(gf4: FieldCtx):
    """R is commutative."""
    h = KPoly.from_adic(gf4, 2, [2, 1])
    f = RingPoly.term(gf4, 2, 0, 1) + RingPoly.term(gf4, 2, 1, 0, h)
    g = RingPoly.term(gf4, 2, 0, 2, h) + RingPoly.term(gf4, 2, 2, 1)
    assert f * g == g * f


def test_mu_reduce(gf2: FieldCtx):
    """Reduction mod u keeps p0."""
    f = RingPoly.term(gf2, 2, 0, 1) + RingPoly.term(gf2, 2, 2)
    assert mu_reduce(f) == KPoly.y_power(gf2, 2, 1)


def test_reciprocal_uses_overall_degree(gf2: FieldCtx):
    """deg is the maximum over p0, p1 and p2."""
    x = KPoly.x_power(gf2, 2, 1)
    zero = KPoly.zero(gf2, 2)
    one = KPoly.one(gf2, 2)
    f = RingPoly(one, zero, x)
    # x·(1 + u²x^{-1}) = x + u²
    assert f.reciprocal() == RingPoly(x, zero, one)


def test_standard_round_trip(gf4: FieldCtx):
    """from_standard inverts the standard vector."""
    f = RingPoly.term(gf4, 2, 1, 1, KPoly.from_adic(gf4, 2, [3, 2]))
    assert RingPoly.from_standard(gf4, 2, f.standard) == f


def test_format(gf2: FieldCtx):
    """Generators print in (x+1)-adic form."""
    s = 3
    h2 = KPoly.from_adic(gf2, s, [1, 1])
    f = RingPoly(KPoly.y_power(gf2, s, 4), KPoly.y_power(gf2, s, 3), h2)
    assert format_rpoly(f) == "(x+1)^4 + u(x+1)^3 + u^2(1 + (x+1))"
    assert format_generators([RingPoly.term(gf2, s, 1, 4), RingPoly.term(gf2, s, 2)]) == (
        "⟨u(x+1)^4, u^2⟩"
    )


def test_spec_rejects_unknown_type(gf2: FieldCtx):
    """Types run from 1 to 8."""
    with pytest.raises(ValidationError):
        CodeSpec(type_tag=9, s=2, ctx=gf2, a=1)


def test_spec_rejects_foreign_h(gf2: FieldCtx):
    """h polynomials must live in K for the CodeSpec's s."""
    with pytest.raises(DimensionError):
        CodeSpec(type_tag=5, s=2, ctx=gf2, a=2, t1=0, h1=KPoly.one(gf2, 3))


def test_type1_encoding(gf2: FieldCtx):
    """Type 1 is ⟨1⟩ for a = 0 and ⟨0⟩ for a = 2^s."""
    whole = CodeSpec(type_tag=1, s=2, ctx=gf2, a=0)
    zero = CodeSpec(type_tag=1, s=2, ctx=gf2, a=4)
    assert generators(whole) == [RingPoly.one(gf2, 2)]
    assert generators(zero) == []
    assert torsion_profile(whole) == TorsionProfile(0, 0, 0)
    assert torsion_profile(zero) == TorsionProfile(4, 4, 4)
    assert violations(CodeSpec(type_tag=1, s=2, ctx=gf2, a=2)) == ["a ∈ {0, 2^s} violated"]


def test_violation_names_the_inequality(gf2: FieldCtx):
    """A type-7 code with t2 >= W reports "t2 < W violated"."""
    spec = CodeSpec(type_tag=7, s=2, ctx=gf2, a=2, b=1, t2=3, h2=KPoly.one(gf2, 2))
    assert w_branch(spec) == (1, ("W3",))
    assert violations(spec) == ["t2 < W violated"]
    with pytest.raises(ValidationError, match="t2 < W violated"):
        validate(spec)
    with pytest.raises(ValidationError):
        code_make(spec)


def test_missing_parameters(gf2: FieldCtx):
    """Required slots are reported when missing."""
    assert "b missing" in violations(CodeSpec(type_tag=7, s=2, ctx=gf2, a=2))


def test_non_unit_h_rejected(gf2: FieldCtx):
    """h_i must be zero or a unit."""
    spec = CodeSpec(type_tag=5, s=2, ctx=gf2, a=2, t1=0, h1=KPoly.y_power(gf2, 2, 1))
    assert "h1 must be zero or a unit" in violations(spec)


def test_valid_type5(gf2: FieldCtx):
    """⟨(x+1)^4 + u(x+1)^3⟩ at s = 3 passes validation."""
    spec = CodeSpec(type_tag=5, s=3, ctx=gf2, a=4, t1=3, h1=KPoly.one(gf2, 3))
    assert struct_L_U(spec) == (None, 4)
    assert v_branch(spec) == (4, "V3")
    assert violations(spec) == []
    _, gens = code_make(spec)
    assert len(gens) == 1
    assert torsion_profile(spec) == TorsionProfile(4, 4, 4)


def test_v_branches(gf2: FieldCtx):
    """The V formula picks its case from which h_i are present."""
    one = KPoly.one(gf2, 3)
    assert v_branch(CodeSpec(type_tag=5, s=3, ctx=gf2, a=3)) == (3, "V1")
    assert v_branch(CodeSpec(type_tag=5, s=3, ctx=gf2, a=6, t2=1, h2=one)) == (3, "V2")
    assert v_branch(CodeSpec(type_tag=5, s=3, ctx=gf2, a=7, t1=1, h1=one)) == (1, "V6")


def test_w_branches(gf2: FieldCtx):
    """W1, W5 and W7 with its β sub-cases."""
    one = KPoly.one(gf2, 3)
    assert w_branch(CodeSpec(type_tag=7, s=3, ctx=gf2, a=5, b=2)) == (2, ("W1",))
    assert w_branch(CodeSpec(type_tag=7, s=3, ctx=gf2, a=5, b=3, t1=1, h1=one)) == (1, ("W5",))
    spec = CodeSpec(type_tag=7, s=3, ctx=gf2, a=5, b=3, t1=2, h1=one, t3=0, h3=one)
    W, labels = w_branch(spec)
    assert labels == ("W7", "beta3-1", "beta4-2")
    # β4 = t1 + valuation(h1 - h3) = 2 + 8
    assert W == min(8 - 5 + 2 - 3 + 0, 10, 3, 8 - 3 + 0)


def test_struct_degrees_for_type7(gf2: FieldCtx):
    """Types 7 and 8 report U and W."""
    spec = CodeSpec(type_tag=7, s=3, ctx=gf2, a=5, b=2)
    assert struct_degrees(spec).paired() == {"U": 5, "W": 2}


def test_three_generator_torsion(gf2: FieldCtx):
    """The verbatim three-generator form has torsion (a, b, c)."""
    spec = CodeSpec(
        type_tag=7, s=3, ctx=gf2, a=5, b=4, c=3, form=CodeForm.three_generator
    )
    assert torsion_profile(spec) == TorsionProfile(5, 4, 3)
    assert len(generators(spec)) == 3


def test_sub_ideal_generators(gf2: FieldCtx):
    """⟨g1⟩ and ⟨g1, g2⟩ are the leading generators of a type-8 code."""
    spec = CodeSpec(type_tag=8, s=3, ctx=gf2, a=5, b=2, c=1)
    gens = generators(spec)
    assert principal_generators(spec) == gens[:1]
    assert type7_generators(spec) == gens[:2]
    assert gens[2] == RingPoly.term(gf2, 3, 2, 1)


def _random_rpoly(ctx: FieldCtx, s: int, rng: np.random.Generator) -> RingPoly:
    parts = (KPoly.from_adic(ctx, s, rng.integers(0, ctx.q, size=1 << s)) for _ in range(3))
    return RingPoly(*parts)


def test_product_is_associative_and_distributive(gf4: FieldCtx, rng: np.random.Generator):
    """(fg)h = f(gh) and f(g + h) = fg + fh in R."""
    for _ in range(10):
        f, g, h = (_random_rpoly(gf4, 2, rng) for _ in range(3))
        assert rpoly_mul(rpoly_mul(f, g), h) == rpoly_mul(f, rpoly_mul(g, h))
        assert rpoly_mul(f, g + h) == rpoly_mul(f, g) + rpoly_mul(f, h)


def test_unreduced_h_compares_by_span(gf2: FieldCtx):
    """Specs that differ only in an absorbed tail of h2 are unequal but span one code."""

    def spec(h2: KPoly) -> CodeSpec:
        return CodeSpec(
            type_tag=5, s=3, ctx=gf2, a=4, b=4, c=4, t2=0, h2=h2, form=CodeForm.three_generator
        )

    reduced = spec(KPoly.one(gf2, 3))
    padded = spec(KPoly.from_adic(gf2, 3, [1, 0, 0, 0, 1]))
    assert reduced != padded
    span = span_build(gf2, 3, generators(reduced))
    assert isinstance(span, IdealSpan)
    assert span == span_build(gf2, 3, generators(padded))
