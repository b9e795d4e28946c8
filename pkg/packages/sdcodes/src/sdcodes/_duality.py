"""Ideal spans, annihilators and duals.

An ideal of R is held as the F_{2^m}-row space of its elements, each
element written p0 ∥ p1 ∥ p2 in standard monomial coordinates. Spans are
kept in RREF, so two codes are equal exactly when their basis matrices are.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from sdcodes._field import FieldCtx, GFMatrix, GFVector, as_matrix, rref, rref_kernel, scale
from sdcodes._ring import RingPoly, TorsionProfile
from sdcodes_core import DimensionError, InconsistencyError

logger = logging.getLogger("sdcodes.duality")


@dataclass(frozen=True, slots=True, eq=False)
class IdealSpan:
    """An ideal of R as a reduced row-echelon basis.

    Attributes:
        ctx: Base field.
        s: Length exponent.
        basis: RREF rows of length 3·2^s, zero rows removed.
        pivots: Pivot column of each row.
    """

    ctx: FieldCtx
    s: int
    basis: GFMatrix
    pivots: tuple[int, ...]

    @property
    def n(self) -> int:
        return 1 << self.s

    @property
    def m(self) -> int:
        return self.ctx.m

    @property
    def dimension(self) -> int:
        return len(self.pivots)

    def _key(self) -> tuple[int, int, int, tuple[int, ...], bytes]:
        return (self.s, self.ctx.m, self.ctx.modulus, self.basis.shape, self.basis.tobytes())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IdealSpan):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def contains(self, vector: GFVector | RingPoly) -> bool:
        """Whether a ring element lies in the ideal."""
        if isinstance(vector, RingPoly):
            vector = vector.standard
        v = np.array(vector, dtype=np.uint8, copy=True)
        if v.shape != (3 * self.n,):
            raise DimensionError(f"expected {3 * self.n} coordinates, got {v.shape}")
        for row, col in zip(self.basis, self.pivots, strict=True):
            if v[col]:
                v ^= scale(self.ctx, v[col], row)
        return not v.any()

    def torsion(self, i: int) -> int:
        return torsion_from_span(self, i)

    def torsion_profile(self) -> TorsionProfile:
        return TorsionProfile(*(torsion_from_span(self, i) for i in range(3)))

    def min_u2_exponent(self) -> int:
        """Least k with u²(x+1)^k in the ideal."""
        return torsion_from_span(self, 2)

    def elements(self) -> list[RingPoly]:
        """Basis rows as ring elements."""
        return [RingPoly.from_standard(self.ctx, self.s, row) for row in self.basis]


def _x_shifts(vector: GFVector, n: int) -> GFMatrix:
    """Rows x^i·v for 0 <= i < n; x acts as a cyclic shift in each block."""
    blocks = vector.reshape(3, n)
    index = (np.arange(n)[np.newaxis, :] - np.arange(n)[:, np.newaxis]) % n
    return blocks[:, index].transpose(1, 0, 2).reshape(n, 3 * n)


def _u_shift(rows: GFMatrix, n: int) -> GFMatrix:
    """u·row: (p0, p1, p2) -> (0, p0, p1)."""
    shifted = np.zeros_like(rows)
    shifted[:, n:] = rows[:, : 2 * n]
    return shifted


def multiplication_matrix(ctx: FieldCtx, s: int, d: RingPoly | GFVector) -> GFMatrix:
    """The 3·2^s square matrix of c ↦ c·d acting on row vectors.

    Row k is the product of d with the k-th coordinate monomial u^j·x^i, so
    c·d = c @ matrix over F_{2^m}.
    """
    n = 1 << s
    vector = d.standard if isinstance(d, RingPoly) else np.asarray(d, dtype=np.uint8)
    if vector.shape != (3 * n,):
        raise DimensionError(f"expected {3 * n} coordinates, got {vector.shape}")
    shifts = _x_shifts(vector, n)
    once = _u_shift(shifts, n)
    return np.vstack([shifts, once, _u_shift(once, n)])


def _span_of_rows(ctx: FieldCtx, s: int, rows: GFMatrix) -> IdealSpan:
    reduced, pivots = rref(ctx, as_matrix(rows, 3 << s))
    return IdealSpan(ctx=ctx, s=s, basis=reduced, pivots=pivots)


def span_build(ctx: FieldCtx, s: int, generators: Sequence[RingPoly]) -> IdealSpan:
    """Row space of every x^i·u^j·g, reduced to RREF; no generators gives ⟨0⟩."""
    n = 1 << s
    blocks = []
    for g in generators:
        if g.s != s or g.ctx != ctx:
            raise DimensionError("generators must live in R for this s and field")
        if not g.is_zero():
            blocks.append(multiplication_matrix(ctx, s, g))
    if not blocks:
        return _span_of_rows(ctx, s, np.zeros((0, 3 * n), dtype=np.uint8))
    span = _span_of_rows(ctx, s, np.vstack(blocks))
    logger.debug(f"span of {len(blocks)} generators at s={s}: dimension {span.dimension}")
    return span


def torsion_from_span(span: IdealSpan, i: int) -> int:
    """T_i with Tor_i(C) = ⟨(x+1)^{T_i}⟩.

    Rows pivoting in block i project onto a basis of Tor_i, whose dimension
    is 2^s - T_i.
    """
    if not 0 <= i <= 2:
        raise DimensionError(f"torsion index must be 0, 1 or 2, got {i}")
    n = span.n
    count = sum(1 for p in span.pivots if i * n <= p < (i + 1) * n)
    return n - count


def annihilator_span(span: IdealSpan) -> IdealSpan:
    """{c : c·d = 0 for every d in the ideal}."""
    n3 = 3 * span.n
    if span.dimension == 0:
        return span_build(span.ctx, span.s, [RingPoly.one(span.ctx, span.s)])
    stacked = np.hstack([multiplication_matrix(span.ctx, span.s, row) for row in span.basis])
    _, kernel = rref_kernel(span.ctx, np.ascontiguousarray(stacked.T))
    rows = np.array(kernel, dtype=np.uint8).reshape(len(kernel), n3)
    return _span_of_rows(span.ctx, span.s, rows)


def _dual_by_reciprocal(span: IdealSpan) -> IdealSpan:
    annihilator = annihilator_span(span)
    return span_build(span.ctx, span.s, [g.reciprocal() for g in annihilator.elements()])


def _dual_by_dot_product(span: IdealSpan) -> IdealSpan:
    """Complement under Σ c_j d_j with the products taken in R3.

    For a codeword b = b0 + u·b1 + u²·b2 the three coefficients of the dot
    product are linear in d with rows (b0,0,0), (b1,b0,0), (b2,b1,b0).
    """
    n = span.n
    if span.dimension == 0:
        return span_build(span.ctx, span.s, [RingPoly.one(span.ctx, span.s)])
    zero = np.zeros((span.dimension, n), dtype=np.uint8)
    b0, b1, b2 = (span.basis[:, i * n : (i + 1) * n] for i in range(3))
    equations = np.vstack(
        [
            np.hstack([b0, zero, zero]),
            np.hstack([b1, b0, zero]),
            np.hstack([b2, b1, b0]),
        ]
    )
    _, kernel = rref_kernel(span.ctx, equations)
    rows = np.array(kernel, dtype=np.uint8).reshape(len(kernel), 3 * n)
    return _span_of_rows(span.ctx, span.s, rows)


def dual_span(span: IdealSpan) -> IdealSpan:
    """C⊥, computed as A(C)* and as a dot-product complement.

    Raises:
        InconsistencyError: If the two computations disagree.
    """
    by_reciprocal = _dual_by_reciprocal(span)
    by_dot = _dual_by_dot_product(span)
    if by_reciprocal != by_dot:
        raise InconsistencyError(
            f"dual computations disagree at s={span.s}, m={span.m}: "
            f"dimensions {by_reciprocal.dimension} and {by_dot.dimension}"
        )
    return by_dot


def is_self_dual(span: IdealSpan) -> bool:
    return dual_span(span) == span
