"""Brute-force checks against the closed forms.

Everything here goes through IdealSpan: structure degrees become span
minima, torsion is read off pivot blocks, and self-duality is decided by
comparing RREF bases. The exhaustive sweep rebuilds the self-dual set from
all canonical parameterizations at tiny sizes.
"""

from __future__ import annotations

import itertools
import logging
from collections.abc import Iterator, Sequence
from dataclasses import dataclass, field, replace

import numpy as np

from sdcodes._chain import KPoly
from sdcodes._duality import IdealSpan, dual_span, is_self_dual, span_build
from sdcodes._field import FieldCtx, field_ctx
from sdcodes._ring import (
    CodeForm,
    CodeSpec,
    RingPoly,
    TorsionProfile,
    generators,
    struct_degrees,
    sub_ideal_generators,
    torsion_profile,
    v_branch,
    validate,
    violations,
    w_branch,
)
from sdcodes_core import BudgetExceededError, InconsistencyError

logger = logging.getLogger("sdcodes.oracle")

V_LABELS = tuple(f"V{i}" for i in range(1, 9))
W_LABELS = tuple(f"W{i}" for i in range(1, 8))
BETA_LABELS = ("beta3-1", "beta3-2", "beta3-3", "beta4-1", "beta4-2")
BRANCH_LABELS = V_LABELS + W_LABELS + BETA_LABELS


@dataclass(slots=True)
class OracleReport:
    """Span-side values next to their closed forms.

    Attributes:
        code_id: Caller-chosen label.
        self_dual: Whether C = C⊥.
        dual_consistent: Whether both dual computations, torsion duality and
            the dimension identity all held.
        struct_span: Structure degrees as span minima.
        struct_formula: The same degrees from the closed forms.
        torsion_span: Torsion profile read from the span.
        torsion_formula: Torsion profile from the type table, if known.
        discrepancies: Human-readable mismatches.
    """

    code_id: str
    self_dual: bool = False
    dual_consistent: bool = True
    struct_span: dict[str, int] = field(default_factory=dict)
    struct_formula: dict[str, int] = field(default_factory=dict)
    torsion_span: TorsionProfile | None = None
    torsion_formula: TorsionProfile | None = None
    discrepancies: list[str] = field(default_factory=list)

    @property
    def consistent(self) -> bool:
        return not self.discrepancies

    def to_dict(self) -> dict[str, object]:
        return {
            "id": self.code_id,
            "self_dual": self.self_dual,
            "dual_consistent": self.dual_consistent,
            "struct_span": self.struct_span,
            "struct_formula": self.struct_formula,
            "torsion_span": list(self.torsion_span.as_tuple()) if self.torsion_span else None,
            "torsion_formula": (
                list(self.torsion_formula.as_tuple()) if self.torsion_formula else None
            ),
            "discrepancies": self.discrepancies,
        }


def _dual_problems(span: IdealSpan) -> tuple[IdealSpan | None, list[str]]:
    """C⊥ and every broken duality identity."""
    problems: list[str] = []
    try:
        dual = dual_span(span)
    except InconsistencyError as e:
        return None, [str(e)]
    n = span.n
    if span.dimension + dual.dimension != 3 * n:
        problems.append(f"dim C + dim C⊥ = {span.dimension + dual.dimension}, expected {3 * n}")
    for i in range(3):
        if dual.torsion(i) != n - span.torsion(2 - i):
            problems.append(
                f"T{i}(C⊥) = {dual.torsion(i)}, expected 2^s - T{2 - i}(C) = "
                f"{n - span.torsion(2 - i)}"
            )
    try:
        if dual_span(dual) != span:
            problems.append("(C⊥)⊥ differs from C")
    except InconsistencyError as e:
        problems.append(str(e))
    return dual, problems


def verify_generators(
    ctx: FieldCtx, s: int, gens: Sequence[RingPoly], code_id: str = "code"
) -> OracleReport:
    """Self-duality and dual consistency for bare generators."""
    span = span_build(ctx, s, gens)
    report = OracleReport(code_id=code_id, torsion_span=span.torsion_profile())
    dual, problems = _dual_problems(span)
    report.dual_consistent = not problems
    report.discrepancies.extend(problems)
    report.self_dual = dual is not None and dual == span
    return report


def _span_degree(spec: CodeSpec, name: str) -> int:
    span = span_build(spec.ctx, spec.s, sub_ideal_generators(spec, name))
    return span.torsion(1) if name == "U" else span.torsion(2)


def oracle_check(spec: CodeSpec, code_id: str = "code") -> OracleReport:
    """Compare span minima and span torsion with the closed forms, and test C = C⊥."""
    if spec.form is CodeForm.canonical:
        validate(spec)
    report = verify_generators(spec.ctx, spec.s, generators(spec), code_id)

    report.torsion_formula = torsion_profile(spec)
    if report.torsion_formula != report.torsion_span:
        report.discrepancies.append(
            f"torsion {report.torsion_span} from span, {report.torsion_formula} from formula"
        )

    if spec.form is CodeForm.canonical:
        report.struct_formula = struct_degrees(spec).paired()
        for name, expected in report.struct_formula.items():
            found = _span_degree(spec, name)
            report.struct_span[name] = found
            if found != expected:
                report.discrepancies.append(f"{name} = {found} from span, {expected} from formula")

    if report.discrepancies:
        logger.debug(f"{code_id}: {'; '.join(report.discrepancies)}")
    return report


def oracle_dual_consistency(spec: CodeSpec | IdealSpan) -> bool:
    """Both duals agree, T_i(C⊥) = 2^s - T_{2-i}(C), and dimensions sum to 3·2^s."""
    span = spec if isinstance(spec, IdealSpan) else span_build(spec.ctx, spec.s, generators(spec))
    _, problems = _dual_problems(span)
    return not problems


# =============================================================================
# EXHAUSTIVE SWEEP
# =============================================================================

KTerm = tuple[int | None, KPoly | None]


def _k_terms(ctx: FieldCtx, s: int) -> list[KTerm]:
    """Zero plus every (t, unit) with the unit taken mod (x+1)^{2^s-t}."""
    n = 1 << s
    terms: list[KTerm] = [(None, None)]
    for t in range(n):
        for head in range(1, ctx.q):
            for tail in itertools.product(range(ctx.q), repeat=n - t - 1):
                terms.append((t, KPoly.from_adic(ctx, s, (head, *tail))))
    return terms


def _candidates(ctx: FieldCtx, s: int) -> Iterator[CodeSpec]:
    n = 1 << s
    terms = _k_terms(ctx, s)

    for a in (0, n):
        yield CodeSpec(type_tag=1, s=s, ctx=ctx, a=a)
    for c in range(n):
        yield CodeSpec(type_tag=2, s=s, ctx=ctx, c=c)

    for delta in range(n):
        for t1, h1 in terms:
            yield CodeSpec(type_tag=3, s=s, ctx=ctx, a=delta, t1=t1, h1=h1)
            for c in range(n):
                yield CodeSpec(type_tag=4, s=s, ctx=ctx, a=delta, c=c, t1=t1, h1=h1)

    for a in range(1, n):
        for (t1, h1), (t2, h2) in itertools.product(terms, repeat=2):
            yield CodeSpec(type_tag=5, s=s, ctx=ctx, a=a, t1=t1, h1=h1, t2=t2, h2=h2)
            for c in range(n):
                yield CodeSpec(
                    type_tag=6, s=s, ctx=ctx, a=a, c=c, t1=t1, h1=h1, t2=t2, h2=h2
                )
            for b, (t3, h3) in itertools.product(range(a), terms):
                seven = CodeSpec(
                    type_tag=7, s=s, ctx=ctx, a=a, b=b, t1=t1, h1=h1, t2=t2, h2=h2, t3=t3, h3=h3
                )
                yield seven
                for c in range(n):
                    yield replace(seven, type_tag=8, c=c)


def iter_canonical_specs(ctx: FieldCtx, s: int) -> Iterator[CodeSpec]:
    """Every valid canonical spec of types 1-8 with h_i over all of K."""
    return (spec for spec in _candidates(ctx, s) if not violations(spec))


def oracle_exhaustive(
    s: int,
    m: int,
    *,
    ctx: FieldCtx | None = None,
    max_s: int = 2,
    max_m: int = 1,
    max_spans: int = 10_000_000,
) -> set[IdealSpan]:
    """All self-dual ideals, found by sweeping canonical parameterizations.

    Raises:
        BudgetExceededError: If (s, m) is beyond max_s/max_m or the sweep
            would build more than max_spans spans.
    """
    if s > max_s or m > max_m:
        raise BudgetExceededError(
            f"exhaustive sweep at s={s}, m={m} exceeds the budget s <= {max_s}, m <= {max_m}"
        )
    ctx = ctx or field_ctx(m)
    n = 1 << s
    seen: set[IdealSpan] = set()
    built = 0
    for spec in iter_canonical_specs(ctx, s):
        built += 1
        if built > max_spans:
            raise BudgetExceededError(f"sweep exceeded {max_spans} spans")
        seen.add(span_build(ctx, s, generators(spec)))
    logger.info(f"s={s}, m={m}: {built} specs gave {len(seen)} distinct ideals")

    half = 3 * n // 2
    found = {span for span in seen if span.dimension == half and is_self_dual(span)}
    logger.info(f"s={s}, m={m}: {len(found)} self-dual ideals")
    return found


# =============================================================================
# BRANCH-AWARE SAMPLING
# =============================================================================


@dataclass(slots=True)
class SampleResult:
    """Sampled specs and the closed-form branches they reach."""

    samples: list[CodeSpec]
    covered: set[str]
    attempts: int

    @property
    def missing(self) -> set[str]:
        return set(BRANCH_LABELS) - self.covered


def _random_unit(ctx: FieldCtx, s: int, rng: np.random.Generator) -> KPoly:
    coeffs = rng.integers(0, ctx.q, size=1 << s)
    coeffs[0] = rng.integers(1, ctx.q)
    return KPoly.from_adic(ctx, s, coeffs)


def _maybe_unit(ctx: FieldCtx, s: int, rng: np.random.Generator) -> KPoly | None:
    return None if rng.random() < 0.25 else _random_unit(ctx, s, rng)


def _draw(ctx: FieldCtx, s: int, rng: np.random.Generator) -> CodeSpec | None:
    """One random spec, biased toward the equality cases of the V and W formulas."""
    n = 1 << s
    type_tag = int(rng.choice([3, 4, 5, 6, 7, 8], p=[0.05, 0.05, 0.2, 0.15, 0.3, 0.25]))
    a = int(rng.integers(1, n))
    h1 = _maybe_unit(ctx, s, rng)
    t1 = int(rng.integers(0, n))

    if type_tag in (3, 4):
        c = int(rng.integers(0, n))
        return CodeSpec(type_tag=type_tag, s=s, ctx=ctx, a=a, t1=t1, h1=h1, c=c)

    h2 = _maybe_unit(ctx, s, rng)
    t2 = int(rng.integers(0, n))
    if rng.random() < 0.4 and 2 * t1 - a >= 0:
        t2 = 2 * t1 - a

    if type_tag in (5, 6):
        spec = CodeSpec(type_tag=5, s=s, ctx=ctx, a=a, t1=t1, h1=h1, t2=t2, h2=h2)
        if type_tag == 6 and not violations(spec):
            upper = v_branch(spec)[0]
            if upper < 1:
                return None
            c = int(rng.integers(0, upper))
            t2 = int(rng.integers(0, c)) if c > 0 else 0
            spec = CodeSpec(type_tag=6, s=s, ctx=ctx, a=a, c=c, t1=t1, h1=h1, t2=t2, h2=h2)
        return spec

    b = int(rng.integers(0, a))
    h3 = _maybe_unit(ctx, s, rng)
    if h1 is not None and h3 is not None and rng.random() < 0.15:
        h3 = h1
    t3 = int(rng.integers(0, n))
    if rng.random() < 0.35 and t1 - a + b >= 0:
        t3 = t1 - a + b
    if rng.random() < 0.35 and t1 - b + t3 >= 0:
        t2 = t1 - b + t3
        if h1 is not None and h3 is not None and rng.random() < 0.3:
            h2 = h1 * h3
    spec = CodeSpec(
        type_tag=7, s=s, ctx=ctx, a=a, b=b, t1=t1, h1=h1, t2=t2, h2=h2, t3=t3, h3=h3
    )
    if type_tag == 8 and not violations(spec):
        upper = w_branch(spec)[0]
        if upper < 1:
            return None
        c = int(rng.integers(0, upper))
        spec = CodeSpec(
            type_tag=8, s=s, ctx=ctx, a=a, b=b, c=c, t1=t1, h1=h1, t2=t2, h2=h2, t3=t3, h3=h3
        )
    return spec


def branch_labels(spec: CodeSpec) -> tuple[str, ...]:
    """Closed-form cases a valid spec exercises."""
    if spec.type_tag in (5, 6):
        return (v_branch(spec)[1],)
    if spec.type_tag in (7, 8):
        return w_branch(spec)[1]
    return ()


def sample_specs(
    ctx: FieldCtx, s: int, count: int, rng: np.random.Generator, cap: int = 100_000
) -> SampleResult:
    """Draw valid specs until count are kept and every branch is covered, or cap draws.

    Past count, a draw is kept only if it reaches a branch not seen yet.
    """
    samples: list[CodeSpec] = []
    covered: set[str] = set()
    attempts = 0
    while attempts < cap and (len(samples) < count or covered != set(BRANCH_LABELS)):
        attempts += 1
        spec = _draw(ctx, s, rng)
        if spec is None or violations(spec):
            continue
        labels = set(branch_labels(spec))
        if len(samples) < count or labels - covered:
            samples.append(spec)
            covered |= labels
    if covered != set(BRANCH_LABELS):
        logger.warning(f"sampler missed branches {sorted(set(BRANCH_LABELS) - covered)}")
    return SampleResult(samples=samples, covered=covered, attempts=attempts)
