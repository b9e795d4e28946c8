"""The ring R = R3[x]/(x^{2^s} + 1) with R3 = F_{2^m}[u]/(u^3), and cyclic codes in it.

A cyclic code is an ideal of R. Every ideal has one of eight canonical
generator shapes (types 1-8); a CodeSpec records the type and its
parameters, and the closed forms below give the structure degrees L, U, V,
W and the torsion profile without touching linear algebra.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from sdcodes._chain import KPoly, format_kpoly, kpoly_inv_unit, kpoly_sub_inverse, standard_degree
from sdcodes._field import FieldCtx, GFVector
from sdcodes_core import DimensionError, ParameterError, ValidationError


@dataclass(frozen=True, slots=True)
class RingPoly:
    """p0 + u·p1 + u²·p2 with each part in K."""

    p0: KPoly
    p1: KPoly
    p2: KPoly

    def __post_init__(self) -> None:
        self.p0.check_compatible(self.p1)
        self.p0.check_compatible(self.p2)

    @classmethod
    def zero(cls, ctx: FieldCtx, s: int) -> RingPoly:
        z = KPoly.zero(ctx, s)
        return cls(z, z, z)

    @classmethod
    def one(cls, ctx: FieldCtx, s: int) -> RingPoly:
        return cls.term(ctx, s, 0)

    @classmethod
    def term(
        cls, ctx: FieldCtx, s: int, u_power: int, y_power: int = 0, h: KPoly | None = None
    ) -> RingPoly:
        """u^i·(x+1)^j·h, with h = 1 when omitted."""
        if not 0 <= u_power <= 2:
            return cls.zero(ctx, s)
        part = KPoly.y_power(ctx, s, y_power)
        if h is not None:
            part = part * h
        zero = KPoly.zero(ctx, s)
        parts = [zero, zero, zero]
        parts[u_power] = part
        return cls(*parts)

    @classmethod
    def from_standard(cls, ctx: FieldCtx, s: int, vector: GFVector) -> RingPoly:
        """Inverse of `standard`: split p0 ∥ p1 ∥ p2 standard coordinates."""
        n = 1 << s
        if len(vector) != 3 * n:
            raise DimensionError(f"expected {3 * n} coordinates, got {len(vector)}")
        return cls(*(KPoly.from_standard(ctx, s, vector[i * n : (i + 1) * n]) for i in range(3)))

    @property
    def ctx(self) -> FieldCtx:
        return self.p0.ctx

    @property
    def s(self) -> int:
        return self.p0.s

    @property
    def parts(self) -> tuple[KPoly, KPoly, KPoly]:
        return self.p0, self.p1, self.p2

    @property
    def standard(self) -> GFVector:
        """p0 ∥ p1 ∥ p2 in standard monomial coordinates."""
        return np.concatenate([np.asarray(p.standard, dtype=np.uint8) for p in self.parts])

    @property
    def degree(self) -> int:
        """Largest standard-basis exponent over the three parts; -1 for zero."""
        return max(standard_degree(p.standard) for p in self.parts)

    def is_zero(self) -> bool:
        return all(p.is_zero() for p in self.parts)

    def __add__(self, other: RingPoly) -> RingPoly:
        return RingPoly(self.p0 + other.p0, self.p1 + other.p1, self.p2 + other.p2)

    def __mul__(self, other: RingPoly) -> RingPoly:
        return rpoly_mul(self, other)

    def u_times(self) -> RingPoly:
        return RingPoly(KPoly.zero(self.ctx, self.s), self.p0, self.p1)

    def reciprocal(self) -> RingPoly:
        """x^{deg c}·c(x^{-1}), deg taken over all three parts."""
        degree = self.degree
        if degree < 0:
            return self
        shift = KPoly.x_power(self.ctx, self.s, degree)
        return RingPoly(*(shift * kpoly_sub_inverse(p) for p in self.parts))

    def __str__(self) -> str:
        return format_rpoly(self)


def rpoly_mul(f: RingPoly, g: RingPoly) -> RingPoly:
    """Product in R, dropping u^3."""
    f.p0.check_compatible(g.p0)
    return RingPoly(
        f.p0 * g.p0,
        f.p0 * g.p1 + f.p1 * g.p0,
        f.p0 * g.p2 + f.p1 * g.p1 + f.p2 * g.p0,
    )


def mu_reduce(f: RingPoly) -> KPoly:
    """f mod u."""
    return f.p0


def _prefixed(prefix: str, part: KPoly) -> str:
    text = format_kpoly(part)
    if not prefix:
        return text
    if text == "1":
        return prefix
    if " + " not in text and text.startswith("(x+1)"):
        return f"{prefix}{text}"
    return f"{prefix}({text})"


def format_rpoly(f: RingPoly) -> str:
    """Render e.g. "(x+1)^4 + u(x+1)^3 + u^2(1 + (x+1))"."""
    pieces = [
        _prefixed(prefix, part)
        for prefix, part in zip(("", "u", "u^2"), f.parts, strict=True)
        if not part.is_zero()
    ]
    return " + ".join(pieces) if pieces else "0"


def format_generators(generators: list[RingPoly]) -> str:
    return "⟨" + ", ".join(format_rpoly(g) for g in generators) + "⟩"


# =============================================================================
# CODE SPECIFICATIONS
# =============================================================================


class CodeForm(str, Enum):
    """How a CodeSpec turns into generators."""

    # generators per the type table, parameters checked against its chain
    canonical = "canonical"
    # ⟨g1, u(x+1)^b + u²(x+1)^{t3}h3, u²(x+1)^c⟩ verbatim, as the self-dual families state it
    three_generator = "three_generator"


@dataclass(frozen=True, slots=True)
class CodeSpec:
    """Generator data for a cyclic code.

    Types 3 and 4 reuse the shared slots: a holds δ, t1 holds t, h1 holds h
    and c holds ω (type 4) or τ (type 2). Type 1 uses a ∈ {0, 2^s} for
    ⟨1⟩ and ⟨0⟩.

    The h_i are stored as given. Terms of h_i that the other generators
    already absorb are not cut off, so two specs of one code can compare
    unequal; compare codes through their IdealSpan, as dedup_by_span and
    table1_diff do.

    Attributes:
        type_tag: 1-8.
        s: Length exponent.
        ctx: Base field.
        a, b, c: Exponents of the three generator leads.
        t1, t2, t3: Exponents in front of h1, h2, h3.
        h1, h2, h3: Zero or units of K; None means zero.
        form: Canonical or three-generator.
    """

    type_tag: int
    s: int
    ctx: FieldCtx
    a: int | None = None
    b: int | None = None
    c: int | None = None
    t1: int | None = None
    t2: int | None = None
    t3: int | None = None
    h1: KPoly | None = None
    h2: KPoly | None = None
    h3: KPoly | None = None
    form: CodeForm = CodeForm.canonical

    def __post_init__(self) -> None:
        if not 1 <= self.type_tag <= 8:
            raise ValidationError([f"type {self.type_tag} outside 1..8"])
        if self.s < 1:
            raise ValidationError([f"s >= 1 violated (s={self.s})"])
        for h in (self.h1, self.h2, self.h3):
            if h is not None and (h.s != self.s or h.ctx != self.ctx):
                raise DimensionError("h polynomials must live in K for this s and field")

    @property
    def m(self) -> int:
        return self.ctx.m

    @property
    def n(self) -> int:
        return 1 << self.s

    def h(self, i: int) -> KPoly:
        """h_i, with None read as zero."""
        value = (self.h1, self.h2, self.h3)[i - 1]
        return value if value is not None else KPoly.zero(self.ctx, self.s)

    def t(self, i: int) -> int:
        value = (self.t1, self.t2, self.t3)[i - 1]
        return value if value is not None else 0

    def has(self, i: int) -> bool:
        """Whether h_i is present and nonzero."""
        return not self.h(i).is_zero()


def _h_term(spec: CodeSpec, i: int) -> KPoly:
    if not spec.has(i):
        return KPoly.zero(spec.ctx, spec.s)
    return spec.h(i).shift(spec.t(i))


def _g1(spec: CodeSpec) -> RingPoly:
    assert spec.a is not None
    return RingPoly(KPoly.y_power(spec.ctx, spec.s, spec.a), _h_term(spec, 1), _h_term(spec, 2))


def _g2(spec: CodeSpec) -> RingPoly:
    assert spec.b is not None
    zero = KPoly.zero(spec.ctx, spec.s)
    return RingPoly(zero, KPoly.y_power(spec.ctx, spec.s, spec.b), _h_term(spec, 3))


def _u2(spec: CodeSpec, exponent: int) -> RingPoly:
    return RingPoly.term(spec.ctx, spec.s, 2, exponent)


def _type3_generator(spec: CodeSpec) -> RingPoly:
    assert spec.a is not None
    zero = KPoly.zero(spec.ctx, spec.s)
    return RingPoly(zero, KPoly.y_power(spec.ctx, spec.s, spec.a), _h_term(spec, 1))


def generators(spec: CodeSpec) -> list[RingPoly]:
    """Generators of the code, without validating the parameter chain."""
    if spec.form is CodeForm.three_generator:
        assert spec.c is not None
        return [_g1(spec), _g2(spec), _u2(spec, spec.c)]

    match spec.type_tag:
        case 1:
            return [] if spec.a == spec.n else [RingPoly.one(spec.ctx, spec.s)]
        case 2:
            assert spec.c is not None
            return [_u2(spec, spec.c)]
        case 3:
            return [_type3_generator(spec)]
        case 4:
            assert spec.c is not None
            return [_type3_generator(spec), _u2(spec, spec.c)]
        case 5:
            return [_g1(spec)]
        case 6:
            assert spec.c is not None
            return [_g1(spec), _u2(spec, spec.c)]
        case 7:
            return [_g1(spec), _g2(spec)]
        case _:
            assert spec.c is not None
            return [_g1(spec), _g2(spec), _u2(spec, spec.c)]


def principal_generators(spec: CodeSpec) -> list[RingPoly]:
    """⟨g1⟩, the type-5 part of a code of type 5-8."""
    return [_g1(spec)]


def type7_generators(spec: CodeSpec) -> list[RingPoly]:
    """⟨g1, g2⟩, the type-7 part of a code of type 7 or 8."""
    return [_g1(spec), _g2(spec)]


def sub_ideal_generators(spec: CodeSpec, degree: str) -> list[RingPoly]:
    """Generators of the sub-ideal a structure degree is defined on.

    L lives in the type-3 part, U and V in ⟨g1⟩, W in ⟨g1, g2⟩.
    """
    match degree:
        case "L":
            return [_type3_generator(spec)]
        case "U" | "V":
            return principal_generators(spec)
        case "W":
            return type7_generators(spec)
    raise ParameterError(f"unknown structure degree {degree!r}")


# =============================================================================
# STRUCTURE DEGREES
# =============================================================================


@dataclass(frozen=True, slots=True)
class TorsionProfile:
    """Tor_i(C) = ⟨(x+1)^{T_i}⟩ for i = 0, 1, 2."""

    T0: int
    T1: int
    T2: int

    def as_tuple(self) -> tuple[int, int, int]:
        return self.T0, self.T1, self.T2


@dataclass(frozen=True, slots=True)
class StructDegrees:
    """Structure degrees; entries a type does not use are None.

    Attributes:
        L: Least k with u²(x+1)^k in the type-3 part.
        U: Least k with u(x+1)^k + u²g in ⟨g1⟩ for some g.
        V: Least k with u²(x+1)^k in ⟨g1⟩.
        W: Least k with u²(x+1)^k in ⟨g1, g2⟩.
        alpha1, alpha3, alpha4: (x+1)-adic valuations entering V and W.
        beta3, beta4: Intermediate minima of the W formula.
    """

    L: int | None = None
    U: int | None = None
    V: int | None = None
    W: int | None = None
    alpha1: int | None = None
    alpha3: int | None = None
    alpha4: int | None = None
    beta3: int | None = None
    beta4: int | None = None

    def paired(self) -> dict[str, int]:
        """The degrees present, for comparison against span minima."""
        values = {"L": self.L, "U": self.U, "V": self.V, "W": self.W}
        return {k: v for k, v in values.items() if v is not None}


def _int(value: int | None, name: str) -> int:
    if value is None:
        raise ValidationError([f"{name} missing"])
    return value


def alpha1(spec: CodeSpec) -> int:
    """Valuation of h1 - h2·h1^{-1}."""
    return (spec.h(1) - spec.h(2) * kpoly_inv_unit(spec.h(1))).valuation


def alpha3(spec: CodeSpec) -> int:
    """Valuation of h2 - h1·h3."""
    return (spec.h(2) - spec.h(1) * spec.h(3)).valuation


def alpha4(spec: CodeSpec) -> int:
    """Valuation of h1 - h3."""
    return (spec.h(1) - spec.h(3)).valuation


def struct_L_U(spec: CodeSpec) -> tuple[int | None, int | None]:
    """(L, U); L for types 3-4, U for types 5-8, None where unused."""
    n = spec.n
    if spec.type_tag in (3, 4):
        delta = _int(spec.a, "a")
        if not spec.has(1):
            return delta, None
        return min(delta, n - delta + _int(spec.t1, "t1")), None
    if spec.type_tag >= 5:
        a = _int(spec.a, "a")
        if not spec.has(1):
            return None, a
        return None, min(a, n - a + _int(spec.t1, "t1"))
    return None, None


def v_branch(spec: CodeSpec) -> tuple[int, str]:
    """V together with the case of the formula that produced it."""
    n = spec.n
    a = _int(spec.a, "a")
    has1, has2 = spec.has(1), spec.has(2)
    if not has1 and not has2:
        return a, "V1"
    if not has1:
        return min(a, n - a + _int(spec.t2, "t2")), "V2"

    t1 = _int(spec.t1, "t1")
    if a <= n - a + t1:
        if not has2:
            return min(a, n - 2 * a + 2 * t1), "V3"
        t2 = _int(spec.t2, "t2")
        if 2 * t1 != a + t2:
            return min(a, n - a + t2, n - 2 * a + 2 * t1), "V4"
        return min(a, n - a + t2 + alpha1(spec)), "V5"
    if not has2:
        return t1, "V6"
    t2 = _int(spec.t2, "t2")
    if 2 * t1 != a + t2:
        return min(t1, a + t2 - t1), "V7"
    return min(n + t1 - a, t1 + alpha1(spec)), "V8"


def struct_V(spec: CodeSpec) -> int:
    """Least k with u²(x+1)^k in ⟨g1⟩."""
    return v_branch(spec)[0]


def _beta3(spec: CodeSpec) -> tuple[int, str]:
    n = spec.n
    a, b = _int(spec.a, "a"), _int(spec.b, "b")
    t1, t3 = _int(spec.t1, "t1"), _int(spec.t3, "t3")
    base = n - a + t1 - b + t3
    if not spec.has(2):
        return base, "beta3-1"
    t2 = _int(spec.t2, "t2")
    if t2 != t1 - b + t3:
        return min(n - a + t2, base), "beta3-2"
    return base + alpha3(spec), "beta3-3"


def _beta4(spec: CodeSpec) -> tuple[int, str]:
    a, b = _int(spec.a, "a"), _int(spec.b, "b")
    t1, t3 = _int(spec.t1, "t1"), _int(spec.t3, "t3")
    if t1 != a - b + t3:
        return min(t1, a - b + t3), "beta4-1"
    return t1 + alpha4(spec), "beta4-2"


def w_branch(spec: CodeSpec) -> tuple[int, tuple[str, ...]]:
    """W together with the case labels (W1-W7, plus β sub-cases for W7)."""
    n = spec.n
    a, b = _int(spec.a, "a"), _int(spec.b, "b")
    has1, has2, has3 = spec.has(1), spec.has(2), spec.has(3)

    if not has1:
        if not has2 and not has3:
            return b, ("W1",)
        if not has2:
            return min(b, a - b + _int(spec.t3, "t3")), ("W2",)
        t2 = _int(spec.t2, "t2")
        if not has3:
            return min(n - a + t2, b), ("W3",)
        return min(n - a + t2, b, a - b + _int(spec.t3, "t3")), ("W4",)

    t1 = _int(spec.t1, "t1")
    if not has3:
        if not has2:
            return t1, ("W5",)
        return min(n - a + _int(spec.t2, "t2"), t1), ("W6",)

    beta3, label3 = _beta3(spec)
    beta4, label4 = _beta4(spec)
    t3 = _int(spec.t3, "t3")
    return min(beta3, beta4, b, n - b + t3), ("W7", label3, label4)


def struct_W(spec: CodeSpec) -> int:
    """Least k with u²(x+1)^k in ⟨g1, g2⟩."""
    return w_branch(spec)[0]


def struct_degrees(spec: CodeSpec) -> StructDegrees:
    """All structure degrees the CodeSpec's type uses."""
    L, U = struct_L_U(spec)
    if spec.type_tag in (5, 6):
        degenerate = spec.has(1) and spec.has(2) and 2 * spec.t(1) == _int(spec.a, "a") + spec.t(2)
        return StructDegrees(U=U, V=struct_V(spec), alpha1=alpha1(spec) if degenerate else None)
    if spec.type_tag in (7, 8):
        W = struct_W(spec)
        if spec.has(1) and spec.has(3):
            return StructDegrees(
                U=U,
                W=W,
                alpha3=alpha3(spec),
                alpha4=alpha4(spec),
                beta3=_beta3(spec)[0],
                beta4=_beta4(spec)[0],
            )
        return StructDegrees(U=U, W=W)
    return StructDegrees(L=L)


def torsion_profile(spec: CodeSpec) -> TorsionProfile:
    """(T0, T1, T2) from the type table."""
    n = spec.n
    if spec.form is CodeForm.three_generator:
        return TorsionProfile(_int(spec.a, "a"), _int(spec.b, "b"), _int(spec.c, "c"))
    match spec.type_tag:
        case 1:
            value = 0 if spec.a == 0 else n
            return TorsionProfile(value, value, value)
        case 2:
            return TorsionProfile(n, n, _int(spec.c, "c"))
        case 3:
            L, _ = struct_L_U(spec)
            assert L is not None
            return TorsionProfile(n, _int(spec.a, "a"), L)
        case 4:
            return TorsionProfile(n, _int(spec.a, "a"), _int(spec.c, "c"))
        case 5:
            _, U = struct_L_U(spec)
            assert U is not None
            return TorsionProfile(_int(spec.a, "a"), U, struct_V(spec))
        case 6:
            _, U = struct_L_U(spec)
            assert U is not None
            return TorsionProfile(_int(spec.a, "a"), U, _int(spec.c, "c"))
        case 7:
            return TorsionProfile(_int(spec.a, "a"), _int(spec.b, "b"), struct_W(spec))
        case _:
            return TorsionProfile(_int(spec.a, "a"), _int(spec.b, "b"), _int(spec.c, "c"))


# =============================================================================
# VALIDATION
# =============================================================================

_REQUIRED: dict[int, tuple[str, ...]] = {
    1: ("a",),
    2: ("c",),
    3: ("a",),
    4: ("a", "c"),
    5: ("a",),
    6: ("a", "c"),
    7: ("a", "b"),
    8: ("a", "b", "c"),
}


def violations(spec: CodeSpec) -> list[str]:
    """Every violated constraint of the CodeSpec's type, as "x < y violated" strings."""
    out: list[str] = []

    def need(ok: bool, text: str) -> None:
        if not ok:
            out.append(f"{text} violated")

    for name in _REQUIRED[spec.type_tag]:
        if getattr(spec, name) is None:
            out.append(f"{name} missing")
    for i in (1, 2, 3):
        if spec.has(i):
            if not spec.h(i).is_unit:
                out.append(f"h{i} must be zero or a unit")
            if (spec.t1, spec.t2, spec.t3)[i - 1] is None:
                out.append(f"t{i} missing")
            else:
                need(spec.t(i) >= 0, f"0 <= t{i}")
    if out:
        return out

    n = spec.n
    top = n - 1
    a = spec.a if spec.a is not None else 0
    b = spec.b if spec.b is not None else 0
    c = spec.c if spec.c is not None else 0
    t1, t2, t3 = spec.t(1), spec.t(2), spec.t(3)

    match spec.type_tag:
        case 1:
            need(a in (0, n), "a ∈ {0, 2^s}")
        case 2:
            need(0 <= c <= top, "0 <= c <= 2^s-1")
        case 3 | 4:
            need(0 <= a <= top, "δ <= 2^s-1")
            if out:
                return out
            L, _ = struct_L_U(spec)
            assert L is not None
            need(0 <= L <= a, "L <= δ")
            if spec.type_tag == 3:
                if spec.has(1):
                    need(t1 < L, "t < L")
            else:
                need(0 <= c < L, "ω < L")
                if spec.has(1):
                    need(t1 < c, "t < ω")
        case 5 | 6:
            need(1 <= a <= top, "1 <= a <= 2^s-1")
            if out:
                return out
            _, U = struct_L_U(spec)
            assert U is not None
            if spec.has(1):
                need(t1 < U, "t1 < U")
            V = struct_V(spec)
            need(V <= a, "V <= a")
            if spec.type_tag == 5:
                if spec.has(2):
                    need(t2 < V, "t2 < V")
            else:
                need(0 <= c < V, "c < V")
                if spec.has(2):
                    need(t2 < c, "t2 < c")
        case _:
            need(1 <= a <= top, "1 <= a <= 2^s-1")
            need(0 <= b, "0 <= b")
            if out:
                return out
            _, U = struct_L_U(spec)
            assert U is not None
            need(b < U, "b < U")
            need(U <= a, "U <= a")
            if spec.has(1):
                need(t1 < b, "t1 < b")
            if out:
                return out
            W = struct_W(spec)
            if spec.has(2):
                need(t2 < W, "t2 < W")
            if spec.has(3):
                need(t3 < W, "t3 < W")
            if spec.type_tag == 8:
                need(0 <= c < W, "c < W")
    return out


def validate(spec: CodeSpec) -> CodeSpec:
    """Return spec unchanged or raise ValidationError naming what failed."""
    found = violations(spec)
    if found:
        raise ValidationError(found)
    return spec


def code_make(spec: CodeSpec) -> tuple[CodeSpec, list[RingPoly]]:
    """Validate a canonical spec and emit its generators."""
    if spec.form is CodeForm.canonical:
        validate(spec)
    return spec, generators(spec)
