"""The chain ring K = F_{2^m}[x]/(x^{2^s} + 1).

Elements are held in (x+1)-adic form: coeffs[j] is the coefficient of
y^j with y = x + 1. Since x^{2^s} + 1 = y^{2^s} in characteristic 2,
multiplication is a power-series product in y truncated at y^{2^s}.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from enum import Enum
from functools import cache

import numpy as np

from sdcodes._field import FieldCtx, GFMatrix, GFVector, scale
from sdcodes_core import DimensionError, NotInvertibleError, ParameterError, UndefinedDegreeError


class Basis(str, Enum):
    """Coefficient basis of a K element."""

    standard = "standard"
    adic = "adic"


def binom_mod2(n: int, k: int) -> int:
    """C(n, k) mod 2 by Lucas: odd iff the bits of k are a subset of the bits of n."""
    if k < 0 or n < 0 or k > n:
        return 0
    return 1 if k & n == k else 0


@cache
def pascal_mod2(n: int) -> GFMatrix:
    """Matrix P with P[i, j] = C(j, i) mod 2.

    P maps adic coefficients to standard ones and, in characteristic 2, also
    the other way round (P·P = I).
    """
    i = np.arange(n)[:, np.newaxis]
    j = np.arange(n)[np.newaxis, :]
    matrix = ((i & j) == i).astype(np.uint8)
    matrix.setflags(write=False)
    return matrix


def _length_exponent(n: int) -> int:
    if n < 1 or n & (n - 1):
        raise DimensionError(f"coefficient length {n} is not a power of two")
    return n.bit_length() - 1


def _change_basis(coeffs: GFVector) -> GFVector:
    matrix = pascal_mod2(len(coeffs))
    picked = np.where(matrix.astype(bool), coeffs[np.newaxis, :], np.uint8(0))
    return np.bitwise_xor.reduce(picked, axis=1).astype(np.uint8)


def kpoly_convert(coeffs: Sequence[int] | GFVector, target: Basis) -> tuple[int, ...]:
    """Change basis between x^j and (x+1)^j coefficients.

    target names the basis of the result; the input is in the other one.
    """
    vector = np.asarray(coeffs, dtype=np.uint8)
    _length_exponent(vector.size)
    Basis(target)
    # the same involution serves both directions
    return tuple(int(c) for c in _change_basis(vector))


@dataclass(frozen=True, slots=True)
class KPoly:
    """Element of K in (x+1)-adic form.

    Attributes:
        ctx: Base field.
        s: Length exponent; there are 2^s coefficients.
        coeffs: coeffs[j] is the coefficient of (x+1)^j.
    """

    ctx: FieldCtx
    s: int
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.s < 1:
            raise DimensionError(f"s must be >= 1, got {self.s}")
        if len(self.coeffs) != 1 << self.s:
            raise DimensionError(f"expected {1 << self.s} coefficients, got {len(self.coeffs)}")
        for c in self.coeffs:
            self.ctx.check(c)

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_adic(cls, ctx: FieldCtx, s: int, coeffs: Sequence[int] | GFVector) -> KPoly:
        """From leading (x+1)-adic coefficients; missing ones are zero."""
        n = 1 << s
        values = [int(c) for c in coeffs]
        if len(values) > n:
            raise DimensionError(f"{len(values)} coefficients do not fit in K with s={s}")
        return cls(ctx, s, tuple(values) + (0,) * (n - len(values)))

    @classmethod
    def from_standard(cls, ctx: FieldCtx, s: int, coeffs: Sequence[int] | GFVector) -> KPoly:
        values = np.zeros(1 << s, dtype=np.uint8)
        given = np.asarray(coeffs, dtype=np.uint8)
        if given.size > values.size:
            raise DimensionError(f"{given.size} coefficients do not fit in K with s={s}")
        values[: given.size] = given
        return cls(ctx, s, kpoly_convert(values, Basis.adic))

    @classmethod
    def zero(cls, ctx: FieldCtx, s: int) -> KPoly:
        return cls(ctx, s, (0,) * (1 << s))

    @classmethod
    def constant(cls, ctx: FieldCtx, s: int, c: int) -> KPoly:
        return cls.from_adic(ctx, s, [c])

    @classmethod
    def one(cls, ctx: FieldCtx, s: int) -> KPoly:
        return cls.constant(ctx, s, 1)

    @classmethod
    def y_power(cls, ctx: FieldCtx, s: int, j: int, c: int = 1) -> KPoly:
        """c·(x+1)^j; zero once j reaches 2^s."""
        n = 1 << s
        if j < 0:
            raise ParameterError(f"negative exponent {j}")
        if j >= n:
            return cls.zero(ctx, s)
        coeffs = [0] * n
        coeffs[j] = c
        return cls(ctx, s, tuple(coeffs))

    @classmethod
    def x_power(cls, ctx: FieldCtx, s: int, e: int) -> KPoly:
        """x^e, with exponents read mod 2^s since x^{2^s} = 1."""
        n = 1 << s
        standard = [0] * n
        standard[e % n] = 1
        return cls.from_standard(ctx, s, standard)

    # -- views ---------------------------------------------------------------

    @property
    def n(self) -> int:
        return 1 << self.s

    @property
    def array(self) -> GFVector:
        return np.asarray(self.coeffs, dtype=np.uint8)

    @property
    def standard(self) -> tuple[int, ...]:
        """Coefficients of x^j, 0 <= j < 2^s."""
        return kpoly_convert(self.coeffs, Basis.standard)

    @property
    def valuation(self) -> int:
        return kpoly_val_unit(self)[0]

    @property
    def is_unit(self) -> bool:
        return self.coeffs[0] != 0

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    # -- arithmetic ----------------------------------------------------------

    def check_compatible(self, other: KPoly) -> None:
        if self.s != other.s or self.ctx != other.ctx:
            raise DimensionError(
                f"operands live in different rings (s={self.s}, m={self.ctx.m}) "
                f"and (s={other.s}, m={other.ctx.m})"
            )

    def __add__(self, other: KPoly) -> KPoly:
        self.check_compatible(other)
        summed = tuple(a ^ b for a, b in zip(self.coeffs, other.coeffs, strict=True))
        return KPoly(self.ctx, self.s, summed)

    # characteristic 2
    __sub__ = __add__

    def __mul__(self, other: KPoly) -> KPoly:
        return kpoly_mul(self, other)

    def scale(self, c: int) -> KPoly:
        """c·self for a field element c."""
        scaled = scale(self.ctx, self.ctx.check(c), self.array)
        return KPoly(self.ctx, self.s, tuple(int(v) for v in scaled))

    def shift(self, t: int) -> KPoly:
        """(x+1)^t·self."""
        if t < 0:
            raise ParameterError(f"negative shift {t}")
        if t >= self.n:
            return KPoly.zero(self.ctx, self.s)
        return KPoly(self.ctx, self.s, (0,) * t + self.coeffs[: self.n - t])

    def unshift(self, t: int) -> KPoly:
        """self / (x+1)^t for self divisible by (x+1)^t."""
        if any(self.coeffs[:t]):
            raise ParameterError(f"not divisible by (x+1)^{t}")
        return KPoly(self.ctx, self.s, self.coeffs[t:] + (0,) * t)

    def truncate(self, r: int) -> KPoly:
        """self mod (x+1)^r."""
        r = max(0, min(r, self.n))
        return KPoly(self.ctx, self.s, self.coeffs[:r] + (0,) * (self.n - r))

    def __str__(self) -> str:
        return format_kpoly(self)


def kpoly_mul(f: KPoly, g: KPoly) -> KPoly:
    """Product in K: the y-series product truncated at y^{2^s}."""
    f.check_compatible(g)
    n = f.n
    fa, ga = f.array, g.array
    acc = np.zeros(n, dtype=np.uint8)
    for i in np.flatnonzero(fa):
        acc[i:] ^= scale(f.ctx, fa[i], ga[: n - i])
    return KPoly(f.ctx, f.s, tuple(int(c) for c in acc))


def kpoly_val_unit(f: KPoly) -> tuple[int, bool]:
    """(x+1)-adic valuation, 2^s for zero, and whether f is a unit."""
    for j, c in enumerate(f.coeffs):
        if c:
            return j, j == 0
    return f.n, False


def kpoly_inv_unit(f: KPoly) -> KPoly:
    """Inverse of a unit by Newton lifting, doubling the precision each step.

    In characteristic 2 the step g ← g·(2 − f·g) reduces to g ← f·g².
    """
    if not f.is_unit:
        raise NotInvertibleError(f"{format_kpoly(f)} is not a unit")
    g = KPoly.constant(f.ctx, f.s, int(f.ctx.inv_table[f.coeffs[0]]))
    precision = 1
    while precision < f.n:
        g = f * g * g
        precision *= 2
    return g


def kpoly_sub_inverse(f: KPoly) -> KPoly:
    """f(x^{-1}), using x^{-1} = x^{2^s - 1}."""
    standard = f.standard
    n = f.n
    flipped = [standard[(n - j) % n] for j in range(n)]
    return KPoly.from_standard(f.ctx, f.s, flipped)


def standard_degree(coeffs: Sequence[int]) -> int:
    """Degree of a standard-basis coefficient list; -1 for zero."""
    for j in range(len(coeffs) - 1, -1, -1):
        if coeffs[j]:
            return j
    return -1


def kpoly_recip(f: KPoly) -> KPoly:
    """x^{deg f}·f(x^{-1}) on the representative of degree < 2^s."""
    standard = f.standard
    degree = standard_degree(standard)
    if degree < 0:
        raise UndefinedDegreeError("the zero polynomial has no degree")
    return KPoly.from_standard(f.ctx, f.s, standard[degree::-1])


def shift_expand(h: KPoly | Sequence[int], k: int, r: int) -> tuple[int, ...]:
    """Adic coefficients of Σ_{j<r} h_j (x+1)^j x^{k-j} mod (x+1)^r.

    Expanding x^{k-j} = ((x+1) + 1)^{k-j} gives the double sum
    Σ_ℓ Σ_{j≤ℓ} h_j C(k-j, ℓ-j) (x+1)^ℓ; binomials are reduced mod 2.
    """
    if r < 0:
        raise ParameterError(f"r must be non-negative, got {r}")
    if k < r:
        raise ParameterError(f"shift_expand needs k >= r, got k={k}, r={r}")
    coeffs = h.coeffs if isinstance(h, KPoly) else tuple(int(c) for c in h)
    if isinstance(h, KPoly) and r > h.n:
        raise ParameterError(f"r={r} exceeds 2^s={h.n}")
    if len(coeffs) < r:
        raise DimensionError(f"need {r} coefficients, got {len(coeffs)}")
    out = []
    for ell in range(r):
        acc = 0
        for j in range(ell + 1):
            if coeffs[j] and binom_mod2(k - j, ell - j):
                acc ^= coeffs[j]
        out.append(acc)
    return tuple(out)


def format_kpoly(f: KPoly) -> str:
    """Render as a sum of c·(x+1)^j terms, e.g. "1 + (x+1)^2"."""
    terms = []
    for j, c in enumerate(f.coeffs):
        if not c:
            continue
        power = "1" if j == 0 else "(x+1)" if j == 1 else f"(x+1)^{j}"
        if c == 1:
            terms.append(power)
        else:
            coeff = f.ctx.format(c)
            coeff = coeff if "+" not in coeff else f"({coeff})"
            terms.append(coeff if j == 0 else f"{coeff}{power}")
    return " + ".join(terms) if terms else "0"
