"""Self-dual cyclic codes of length 2^s over R3: the three families and their counts.

Every self-dual code is one of:
    - the type-4 code ⟨u(x+1)^{2^{s-1}}, u²⟩;
    - an h1 = 0 code ⟨(x+1)^a + u²h, u(x+1)^{2^{s-1}}, u²(x+1)^{2^s-a}⟩ with h
      in the kernel of M(a);
    - an h1-unit code whose h1 solves the N-system and whose h2 solves the
      K-system with right-hand side c(h1).
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from sdcodes._chain import KPoly, kpoly_sub_inverse
from sdcodes._duality import IdealSpan, span_build
from sdcodes._field import (
    AffineSolution,
    FieldCtx,
    GFMatrix,
    GFVector,
    field_ctx,
    rref_kernel,
    solution_vectors,
    solve_affine,
)
from sdcodes._ring import CodeForm, CodeSpec, RingPoly, TorsionProfile, generators
from sdcodes_core import (
    BudgetExceededError,
    CodeMetadata,
    DimensionError,
    Family,
    InconsistencyError,
    ParameterError,
)

logger = logging.getLogger("sdcodes.enumerate")

Cell = tuple[int, int, int]


# =============================================================================
# BINOMIAL MATRICES
# =============================================================================


class MatrixKind(str, Enum):
    T = "T"
    M = "M"
    N = "N"
    K = "K"


@dataclass(frozen=True, slots=True)
class BinomMatrix:
    """A strictly lower-triangular binomial matrix mod 2.

    Attributes:
        kind: Which family the matrix was built for.
        params: (a+b, b) for T, (a,) for M, (a, t) for N and K.
        matrix: b×b 0/1 entries, valid over any F_{2^m}.
    """

    kind: MatrixKind
    params: tuple[int, ...]
    matrix: GFMatrix

    @property
    def size(self) -> int:
        return self.matrix.shape[0]


def build_T(a_plus_b: int, b: int) -> BinomMatrix:
    """T(a+b, b): entry (i, j) for i > j is C(a-j, i-j) mod 2, zero elsewhere.

    Diagonal terms (-1)^{a+j} + 1 vanish in characteristic 2.
    """
    a = a_plus_b - b
    if b < 1 or a < b:
        raise ParameterError(f"T(a+b, b) needs a >= b >= 1, got a={a}, b={b}")
    i = np.arange(b)[:, np.newaxis]
    j = np.arange(b)[np.newaxis, :]
    k = i - j
    top = a - j
    matrix = ((i > j) & ((k & top) == k)).astype(np.uint8)
    matrix.setflags(write=False)
    return BinomMatrix(MatrixKind.T, (a_plus_b, b), matrix)


def build_M(s: int, a: int) -> BinomMatrix:
    """M(a) = T(2^s, 2^s - a)."""
    n = 1 << s
    return BinomMatrix(MatrixKind.M, (a,), build_T(n, n - a).matrix)


def build_N(s: int, a: int, t: int) -> BinomMatrix:
    """N(a, t) = T(a + 2^{s-1} - 2t, 2^{s-1} - t)."""
    half = 1 << (s - 1)
    return BinomMatrix(MatrixKind.N, (a, t), build_T(a + half - 2 * t, half - t).matrix)


def build_K(s: int, a: int, t: int) -> BinomMatrix:
    """K(a, t) = T(2^s - 2t, 2^s - a - t)."""
    n = 1 << s
    return BinomMatrix(MatrixKind.K, (a, t), build_T(n - 2 * t, n - a - t).matrix)


def nullity_T(b: int, a: int | None = None) -> int:
    """Nullity of T(a+b, b) over any F_{2^m}.

    ceil((b + 1) / 2) unless a is odd and b even, where it drops to b / 2.
    With a omitted the first case is assumed.
    """
    if b <= 0:
        return 0
    if a is not None and a % 2 == 1 and b % 2 == 0:
        return b // 2
    return (b + 2) // 2


# =============================================================================
# RECORDS
# =============================================================================


@dataclass(frozen=True, slots=True)
class SelfDualCode:
    """An enumerated self-dual code with its provenance.

    Attributes:
        spec: Generator data.
        family: Which family produced it.
        a, t1, t2: Enumeration cell; None where the family has no such slot.
        k: 1-based index of the solution within its cell.
    """

    spec: CodeSpec
    family: Family
    a: int | None = None
    t1: int | None = None
    t2: int | None = None
    k: int | None = None

    @property
    def cell(self) -> tuple[int | None, int | None, int | None, int | None]:
        return self.a, self.t1, self.t2, self.k

    @property
    def expected_torsion(self) -> TorsionProfile:
        n = self.spec.n
        if self.family is Family.type4:
            return TorsionProfile(n, n // 2, 0)
        assert self.a is not None
        return TorsionProfile(self.a, n // 2, n - self.a)

    def generators(self) -> list[RingPoly]:
        return generators(self.spec)

    def span(self) -> IdealSpan:
        return span_build(self.spec.ctx, self.spec.s, self.generators())

    def metadata(self) -> CodeMetadata:
        return CodeMetadata(
            type_tag=self.spec.type_tag,
            family=self.family,
            a=self.a,
            t1=self.t1,
            t2=self.t2,
            k=self.k,
        )


@dataclass(frozen=True, slots=True)
class CellCount:
    """Counting data for one (a, t1, t2, k) entry.

    Attributes:
        tau: Number of h2 with b0 != 0, from the closed form.
        delta: Whether the K-system is consistent.
        delta_prime: Whether it stays consistent with b0 = 0.
        n1: Solutions of the K-system.
        n2: Solutions with b0 = 0.
    """

    tau: int
    delta: bool
    delta_prime: bool
    n1: int
    n2: int


@dataclass(slots=True)
class CountReport:
    """Per-family counts and the per-cell breakdown of N'."""

    s: int
    m: int
    count_type4: int = 0
    count_N: int = 0
    count_Nprime: int = 0
    cells: dict[tuple[int, int, int, int], CellCount] = field(default_factory=dict)

    @property
    def total(self) -> int:
        return self.count_type4 + self.count_N + self.count_Nprime

    def cell_totals(self) -> dict[Cell, int]:
        """τ summed over k for each (a, t1, t2)."""
        totals: dict[Cell, int] = {}
        for (a, t1, t2, _), count in self.cells.items():
            totals[(a, t1, t2)] = totals.get((a, t1, t2), 0) + count.tau
        return totals

    def to_dict(self) -> dict[str, object]:
        return {
            "s": self.s,
            "m": self.m,
            "type4": self.count_type4,
            "N": self.count_N,
            "Nprime": self.count_Nprime,
            "total": self.total,
            "cells": [
                {"a": a, "t1": t1, "t2": t2, "tau": tau}
                for (a, t1, t2), tau in self.cell_totals().items()
            ],
        }


# =============================================================================
# SHARED HELPERS
# =============================================================================


def _ctx(m: int, ctx: FieldCtx | None) -> FieldCtx:
    if ctx is None:
        return field_ctx(m)
    if ctx.m != m:
        raise DimensionError(f"field context has m={ctx.m}, expected {m}")
    return ctx


def _kernel_vectors(ctx: FieldCtx, matrix: GFMatrix) -> list[GFVector]:
    """Every kernel vector, sorted lexicographically."""
    _, kernel = rref_kernel(ctx, matrix)
    zero = np.zeros(matrix.shape[1], dtype=np.uint8)
    return solution_vectors(ctx, AffineSolution(particular=zero, kernel=kernel))


def _split(h: KPoly) -> tuple[int | None, KPoly | None]:
    """(t, unit) with h = (x+1)^t·unit; (None, None) for zero."""
    if h.is_zero():
        return None, None
    t = h.valuation
    return t, h.unshift(t)


def _type_tag(s: int, a: int, unit_tail: bool) -> int:
    if a == 1 << (s - 1):
        return 5
    return 7 if unit_tail else 8


def selfdual_type4(s: int, m: int = 1, *, ctx: FieldCtx | None = None) -> CodeSpec:
    """⟨u(x+1)^{2^{s-1}}, u²⟩, the only self-dual code of type 4."""
    if s < 1:
        raise ParameterError(f"s must be >= 1, got {s}")
    return CodeSpec(type_tag=4, s=s, ctx=_ctx(m, ctx), a=1 << (s - 1), c=0)


# =============================================================================
# h1 = 0 FAMILY
# =============================================================================


def enumerate_h1_zero(
    s: int, m: int, a: int, *, ctx: FieldCtx | None = None
) -> list[SelfDualCode]:
    """One code per kernel vector h of M(a), in lexicographic order of h."""
    n = 1 << s
    if s < 1 or not n // 2 <= a <= n - 1:
        raise ParameterError(f"a must lie in [2^(s-1), 2^s - 1] = [{n // 2}, {n - 1}], got {a}")
    ctx = _ctx(m, ctx)
    codes = []
    for k, vector in enumerate(_kernel_vectors(ctx, build_M(s, a).matrix), start=1):
        t2, h2 = _split(KPoly.from_adic(ctx, s, vector))
        spec = CodeSpec(
            type_tag=_type_tag(s, a, t2 == 0),
            s=s,
            ctx=ctx,
            a=a,
            b=n // 2,
            c=n - a,
            t2=t2,
            h2=h2,
            form=CodeForm.three_generator,
        )
        codes.append(SelfDualCode(spec, Family.h1zero, a=a, k=k))
    logger.debug(f"h1=0 family, s={s}, m={m}, a={a}: {len(codes)} codes")
    return codes


def count_N(s: int, m: int) -> int:
    """Σ_{a=2^{s-1}}^{2^s-1} (2^m)^{ceil((2^s - a + 1)/2)}."""
    if s < 1:
        raise ParameterError(f"s must be >= 1, got {s}")
    n = 1 << s
    q = 1 << m
    return sum(q ** nullity_T(n - a, a) for a in range(n // 2, n))


# =============================================================================
# h1 UNIT FAMILY
# =============================================================================


def admissible_cells(s: int) -> list[Cell]:
    """(a, t1, t2) with 2^{s-1} <= a <= min(2^{s-1} + t1, 2^s - 1) and 2t1 > a + t2.

    Ordered by a, then t1, then t2.
    """
    if s < 2:
        return []
    n = 1 << s
    half = n // 2
    cells = []
    for a in range(half, n):
        for t1 in range(max(0, a - half), half):
            for t2 in range(0, n - a):
                if 2 * t1 > a + t2:
                    cells.append((a, t1, t2))
    return cells


def h1_solution_count(s: int, m: int, t1: int, *, a: int | None = None) -> int:
    """Number of units h1 solving the N-system N(a, t1).

    Without a, the count assumes the generic nullity of N(a, t1): q - 1 for
    t1 = 2^{s-1} - 1, (q - 1)·q^{(2^{s-1}-t1)/2} when 2^{s-1} - t1 is even,
    and 0 otherwise. With a, the parity of a - t1 is taken into account.
    """
    half = 1 << (s - 1)
    q = 1 << m
    b = half - t1
    if a is not None:
        # units = kernel of N minus the kernel with a0 = 0, which is T(a-t1-1 + b-1, b-1)
        return q ** nullity_T(b, a - t1) - q ** nullity_T(b - 1, a - t1 - 1)
    if t1 == half - 1:
        return q - 1
    if b % 2 == 0:
        return (q - 1) * q ** (b // 2)
    return 0


def h1_solutions(s: int, m: int, a: int, t1: int, *, ctx: FieldCtx | None = None) -> list[KPoly]:
    """Units h1 = Σ a_j (x+1)^j, j < 2^{s-1} - t1, with N(a, t1)·(a_j) = 0.

    The list order defines the index k (1-based).
    """
    ctx = _ctx(m, ctx)
    vectors = _kernel_vectors(ctx, build_N(s, a, t1).matrix)
    return [KPoly.from_adic(ctx, s, v) for v in vectors if v[0]]


def c_vector(
    s: int, a: int, t1: int, t2: int, h1: KPoly, *, strict: bool = True
) -> tuple[int, ...]:
    """Adic coefficients of (x+1)^{2t1-a-t2}·x^{a-t1}·h1² mod (x+1)^{2^s-a-t2}.

    strict=False admits the boundary 2t1 = a + t2, where c0 = a0² != 0.
    """
    if (strict and 2 * t1 <= a + t2) or 2 * t1 < a + t2:
        raise ParameterError(f"c_vector needs 2t1 > a + t2, got a={a}, t1={t1}, t2={t2}")
    if a < t1:
        raise ParameterError(f"c_vector needs a >= t1, got a={a}, t1={t1}")
    if h1.s != s:
        raise DimensionError(f"h1 lives in K with s={h1.s}, expected {s}")
    length = (1 << s) - a - t2
    if length < 1:
        raise ParameterError(f"empty K-system for a={a}, t2={t2}")
    x_term = KPoly.x_power(h1.ctx, s, a - t1)
    value = (x_term * h1 * h1).shift(2 * t1 - a - t2)
    return value.coeffs[:length]


def h3_generator(s: int, a: int, t1: int, h1: KPoly) -> KPoly:
    """(x+1)^{2^{s-1}+t1-a}·x^{a-t1}·h1(x^{-1}) mod (x+1)^{2^s-a}."""
    n = 1 << s
    half = n // 2
    if not half <= a <= half + t1 or a >= n:
        raise ParameterError(
            f"h3_generator needs 2^(s-1) <= a <= 2^(s-1) + t1, got a={a}, t1={t1}"
        )
    if not h1.is_unit:
        raise ParameterError("h3_generator needs a unit h1")
    value = KPoly.x_power(h1.ctx, s, a - t1) * kpoly_sub_inverse(h1)
    return value.shift(half + t1 - a).truncate(n - a)


def _k_system(s: int, a: int, t2: int) -> GFMatrix:
    return build_K(s, a, t2).matrix


def cell_tau(
    s: int, a: int, t1: int, t2: int, h1: KPoly, *, strict: bool = True
) -> CellCount:
    """τ for one (a, t1, t2, k) entry, with its consistency flags.

    δ' is read off the K-system with its first column removed; the first
    row stays, so c0 != 0 makes both flags false. Below that zero row the
    reduced system is T((a-t2-1) + (b-1), b-1).
    """
    ctx = h1.ctx
    q = ctx.q
    b = (1 << s) - a - t2
    a_T = a - t2
    matrix = _k_system(s, a, t2)
    c = np.asarray(c_vector(s, a, t1, t2, h1, strict=strict), dtype=np.uint8)

    full = solve_affine(ctx, matrix, c)
    reduced = solve_affine(ctx, matrix[:, 1:], c)
    delta = full is not None
    delta_prime = reduced is not None
    n1 = q ** full.dimension if full is not None else 0
    n2 = q ** reduced.dimension if reduced is not None else 0
    tau = q ** nullity_T(b, a_T) * delta - q ** nullity_T(b - 1, a_T - 1) * delta_prime
    if tau != n1 - n2:
        raise InconsistencyError(
            f"cell (a={a}, t1={t1}, t2={t2}): closed-form τ={tau}, solved n1-n2={n1 - n2}"
        )
    return CellCount(tau=tau, delta=delta, delta_prime=delta_prime, n1=n1, n2=n2)


def _h2_solutions(s: int, a: int, t1: int, t2: int, h1: KPoly) -> list[KPoly]:
    ctx = h1.ctx
    c = c_vector(s, a, t1, t2, h1)
    solution = solve_affine(ctx, _k_system(s, a, t2), c)
    if solution is None:
        return []
    return [KPoly.from_adic(ctx, s, v) for v in solution_vectors(ctx, solution) if v[0]]


def _unit_code(s: int, a: int, t1: int, t2: int, k: int, h1: KPoly, h2: KPoly) -> SelfDualCode:
    n = 1 << s
    t3, h3 = _split(h3_generator(s, a, t1, h1))
    spec = CodeSpec(
        type_tag=_type_tag(s, a, t2 == 0),
        s=s,
        ctx=h1.ctx,
        a=a,
        b=n // 2,
        c=n - a,
        t1=t1,
        t2=t2,
        t3=t3,
        h1=h1,
        h2=h2,
        h3=h3,
        form=CodeForm.three_generator,
    )
    return SelfDualCode(spec, Family.h1unit, a=a, t1=t1, t2=t2, k=k)


CellResult = tuple[list[SelfDualCode], dict[tuple[int, int, int, int], CellCount]]


def _unit_cell(s: int, ctx: FieldCtx, cell: Cell) -> CellResult:
    a, t1, t2 = cell
    codes: list[SelfDualCode] = []
    counts: dict[tuple[int, int, int, int], CellCount] = {}
    for k, h1 in enumerate(h1_solutions(s, ctx.m, a, t1, ctx=ctx), start=1):
        count = cell_tau(s, a, t1, t2, h1)
        counts[(a, t1, t2, k)] = count
        found = [_unit_code(s, a, t1, t2, k, h1, h2) for h2 in _h2_solutions(s, a, t1, t2, h1)]
        if len(found) != count.tau:
            raise InconsistencyError(
                f"cell {cell}, k={k}: {len(found)} h2 solutions but τ={count.tau}"
            )
        codes.extend(found)
    logger.debug(f"h1-unit cell (a={a}, t1={t1}, t2={t2}): {len(codes)} codes")
    return codes, counts


def _map_cells(s: int, ctx: FieldCtx, workers: int) -> list[CellResult]:
    cells = admissible_cells(s)
    if workers <= 1:
        return [_unit_cell(s, ctx, cell) for cell in cells]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        # map keeps cell order
        return list(pool.map(lambda cell: _unit_cell(s, ctx, cell), cells))


def enumerate_h1_unit(
    s: int, m: int, *, ctx: FieldCtx | None = None, workers: int = 1
) -> tuple[list[SelfDualCode], dict[tuple[int, int, int, int], CellCount]]:
    """All h1-unit codes in (a, t1, t2, k) order, plus per-entry counts.

    Codes are not deduplicated by span here; enumerate_all does that.
    """
    ctx = _ctx(m, ctx)
    codes: list[SelfDualCode] = []
    counts: dict[tuple[int, int, int, int], CellCount] = {}
    for cell_codes, cell_counts in _map_cells(s, ctx, workers):
        codes.extend(cell_codes)
        counts.update(cell_counts)
    return codes, counts


def count_Nprime(
    s: int, m: int, *, ctx: FieldCtx | None = None, budget: int | None = None
) -> CountReport:
    """N' as the sum of τ over every (a, t1, t2, k), without enumerating h2.

    Raises:
        BudgetExceededError: As soon as the running sum passes budget.
    """
    ctx = _ctx(m, ctx)
    report = CountReport(s=s, m=m)
    running = 0
    for a, t1, t2 in admissible_cells(s):
        for k, h1 in enumerate(h1_solutions(s, m, a, t1, ctx=ctx), start=1):
            count = cell_tau(s, a, t1, t2, h1)
            report.cells[(a, t1, t2, k)] = count
            running += count.tau
            if budget is not None and running > budget:
                raise BudgetExceededError(
                    f"N' passed the budget of {budget} at cell (a={a}, t1={t1}, t2={t2})"
                )
    report.count_Nprime = running
    return report


# =============================================================================
# CONDITIONS AND ANNIHILATORS
# =============================================================================


def _reflect(h: KPoly, e: int) -> KPoly:
    """x^e·h(x^{-1})."""
    return KPoly.x_power(h.ctx, h.s, e) * kpoly_sub_inverse(h)


def selfdual_conditions(code: SelfDualCode) -> dict[str, bool]:
    """Evaluate the polynomial conditions characterising the code's family.

    h1 = 0: h ≡ x^a·h(x^{-1}) mod (x+1)^{2^s-a}.
    h1 unit: C4, h1 ≡ x^{a-t1}·h1(x^{-1}) mod (x+1)^{2^{s-1}-t1}, and C5,
    h2 ≡ x^{a-t2}·h2(x^{-1}) + (x+1)^{2t1-a-t2}·x^{a-t1}·h1² mod (x+1)^{2^s-t2-a}.
    """
    spec = code.spec
    n = spec.n
    if code.family is Family.type4:
        return {}
    a = code.a
    assert a is not None
    if code.family is Family.h1zero:
        h = spec.h(2).shift(spec.t(2))
        return {"M": (h - _reflect(h, a)).truncate(n - a).is_zero()}

    t1, t2 = spec.t(1), spec.t(2)
    h1, h2 = spec.h(1), spec.h(2)
    c4 = (h1 - _reflect(h1, a - t1)).truncate(n // 2 - t1).is_zero()
    correction = (KPoly.x_power(h1.ctx, spec.s, a - t1) * h1 * h1).shift(2 * t1 - a - t2)
    c5 = (h2 - _reflect(h2, a - t2) - correction).truncate(n - t2 - a).is_zero()
    return {"C4": c4, "C5": c5}


def annihilator_generators(code: SelfDualCode) -> list[RingPoly]:
    """Generators of A(C) in closed form.

    For h1-unit codes A(C) = ⟨(x+1)^a + u(x+1)^{t1}h1 + u²(x+1)^{t2}F,
    u(x+1)^{2^{s-1}} + u²(x+1)^{2^{s-1}+t1-a}h1, u²(x+1)^{2^s-a}⟩ with
    F = h2 + (x+1)^{2t1-a-t2}h1². The other families annihilate themselves.
    """
    spec = code.spec
    if code.family is not Family.h1unit:
        return generators(spec)
    assert code.a is not None
    ctx, s, n, a = spec.ctx, spec.s, spec.n, code.a
    t1, t2 = spec.t(1), spec.t(2)
    h1, h2 = spec.h(1), spec.h(2)
    F = h2 + (h1 * h1).shift(2 * t1 - a - t2)
    zero = KPoly.zero(ctx, s)
    return [
        RingPoly(KPoly.y_power(ctx, s, a), h1.shift(t1), F.shift(t2)),
        RingPoly(zero, KPoly.y_power(ctx, s, n // 2), h1.shift(n // 2 + t1 - a)),
        RingPoly.term(ctx, s, 2, n - a),
    ]


# =============================================================================
# TOTALS
# =============================================================================


def dedup_by_span(codes: Sequence[SelfDualCode]) -> tuple[list[SelfDualCode], int]:
    """Keep the first code of every span; returns (kept, number dropped)."""
    seen: set[IdealSpan] = set()
    kept = []
    for code in codes:
        span = code.span()
        if span in seen:
            logger.info(f"span collision dropped: {code.family.value} cell {code.cell}")
            continue
        seen.add(span)
        kept.append(code)
    return kept, len(codes) - len(kept)


def enumerate_all(
    s: int,
    m: int,
    *,
    ctx: FieldCtx | None = None,
    dedup: bool = True,
    workers: int = 1,
    max_codes: int | None = None,
) -> tuple[list[SelfDualCode], CountReport]:
    """Every self-dual code, ordered type4, then h1 = 0 by (a, k), then h1 unit.

    Raises:
        BudgetExceededError: If 1 + N + N' exceeds max_codes.
        InconsistencyError: If the enumerated total differs from 1 + N + N'.
    """
    if s < 1:
        raise ParameterError(f"s must be >= 1, got {s}")
    ctx = _ctx(m, ctx)
    n = 1 << s

    # N is closed-form and N' >= 0, so 1 + N already bounds the total from below
    n_zero = count_N(s, m)
    if max_codes is not None and 1 + n_zero > max_codes:
        raise BudgetExceededError(
            f"at least 1 + {n_zero} codes exceed the budget of {max_codes}"
        )
    report = count_Nprime(
        s, m, ctx=ctx, budget=None if max_codes is None else max_codes - 1 - n_zero
    )
    report.count_type4 = 1
    report.count_N = n_zero
    logger.info(
        f"s={s}, m={m}: expecting 1 + {report.count_N} + {report.count_Nprime} = {report.total}"
    )

    codes = [SelfDualCode(selfdual_type4(s, m, ctx=ctx), Family.type4)]
    for a in range(n // 2, n):
        codes.extend(enumerate_h1_zero(s, m, a, ctx=ctx))
    unit_codes, _ = enumerate_h1_unit(s, m, ctx=ctx, workers=workers)
    codes.extend(unit_codes)

    if dedup:
        codes, dropped = dedup_by_span(codes)
        if dropped:
            logger.warning(f"{dropped} duplicate spans removed")

    if len(codes) != report.total:
        raise InconsistencyError(
            f"enumerated {len(codes)} codes but 1 + N + N' = {report.total}"
        )
    return codes, report
