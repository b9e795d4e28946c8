"""Arithmetic in F_{2^m} and exact linear algebra over it.

Field elements are plain ints in [0, 2^m): bit i is the coefficient of α^i in
the polynomial basis. Matrices and vectors are numpy uint8 arrays, which
caps m at 8. Multiplication goes through a precomputed q×q table, so a row
operation is a single fancy-indexed lookup plus an XOR.
"""

from __future__ import annotations

import itertools
from collections.abc import Sequence
from dataclasses import dataclass, field
from functools import cache

import galois
import numpy as np
import numpy.typing as npt

from sdcodes_core import DimensionError, DivisionByZeroError, FieldError

GFMatrix = npt.NDArray[np.uint8]
GFVector = npt.NDArray[np.uint8]

MAX_M = 8

# Low-weight irreducible polynomials, bit i = coefficient of x^i.
DEFAULT_MODULI: dict[int, int] = {
    1: 0b11,  # x + 1
    2: 0b111,  # x^2 + x + 1
    3: 0b1011,  # x^3 + x + 1
    4: 0b10011,  # x^4 + x + 1
    5: 0b100101,  # x^5 + x^2 + 1
    6: 0b1000011,  # x^6 + x + 1
    7: 0b10000011,  # x^7 + x + 1
    8: 0b100011011,  # x^8 + x^4 + x^3 + x + 1
}


def _clmod(a: int, b: int) -> int:
    """Remainder of a modulo b as polynomials over F_2."""
    db = b.bit_length() - 1
    while a and a.bit_length() - 1 >= db:
        a ^= b << (a.bit_length() - 1 - db)
    return a


def _smallest_factor(modulus: int) -> int | None:
    """Trial division by every polynomial of degree 1..deg/2."""
    degree = modulus.bit_length() - 1
    for divisor in range(2, 1 << (degree // 2 + 1)):
        if _clmod(modulus, divisor) == 0:
            return divisor
    return None


def _multiplication_table(m: int, modulus: int) -> GFMatrix:
    gf = galois.GF(2) if m == 1 else galois.GF(2**m, irreducible_poly=modulus, verify=False)
    elements = gf.elements
    table = elements[:, np.newaxis] * elements[np.newaxis, :]
    return np.asarray(table.view(np.ndarray), dtype=np.uint8)


@dataclass(frozen=True, slots=True)
class FieldCtx:
    """The field F_{2^m} = F_2[α]/(modulus).

    Attributes:
        m: Extension degree.
        modulus: Irreducible polynomial as an int, bit i = coefficient of x^i.
        mul_table: q×q products, indexed by element ints.
        inv_table: Inverses, with inv_table[0] = 0 as a placeholder.
    """

    m: int
    modulus: int
    mul_table: GFMatrix = field(init=False, repr=False, compare=False)
    inv_table: GFVector = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if not 1 <= self.m <= MAX_M:
            raise FieldError(f"m must be in 1..{MAX_M}, got {self.m}")
        if self.modulus.bit_length() - 1 != self.m:
            raise FieldError(f"modulus {self.modulus:#b} does not have degree {self.m}")
        if not self.modulus & 1:
            raise FieldError(f"modulus {self.modulus:#b} has zero constant term")
        factor = _smallest_factor(self.modulus)
        if factor is not None:
            raise FieldError(f"modulus {self.modulus:#b} is divisible by {factor:#b}")

        table = _multiplication_table(self.m, self.modulus)
        table.setflags(write=False)
        inverses = np.zeros(self.q, dtype=np.uint8)
        inverses[1:] = np.argmax(table[1:] == 1, axis=1)
        inverses.setflags(write=False)
        object.__setattr__(self, "mul_table", table)
        object.__setattr__(self, "inv_table", inverses)

    @classmethod
    def from_bits(cls, bits: Sequence[int]) -> FieldCtx:
        """Build from modulus bits listed constant term first."""
        if not bits or any(b not in (0, 1) for b in bits):
            raise FieldError(f"modulus bits must be 0/1, got {list(bits)}")
        return cls(m=len(bits) - 1, modulus=sum(b << i for i, b in enumerate(bits)))

    @property
    def q(self) -> int:
        return 1 << self.m

    @property
    def modulus_bits(self) -> tuple[int, ...]:
        return tuple((self.modulus >> i) & 1 for i in range(self.m + 1))

    def check(self, a: int) -> int:
        """Validate that a is an element of this field."""
        if not 0 <= a < self.q:
            raise DimensionError(f"{a} is not an element of F_{self.q}")
        return a

    def format(self, a: int) -> str:
        """Render an element as a polynomial in α."""
        if a == 0:
            return "0"
        terms = []
        for i in reversed(range(self.m)):
            if (a >> i) & 1:
                terms.append("1" if i == 0 else "α" if i == 1 else f"α^{i}")
        return "+".join(terms)


@cache
def field_ctx(m: int, modulus: int | None = None) -> FieldCtx:
    """Cached FieldCtx, defaulting to the built-in modulus for m."""
    if modulus is None:
        if m not in DEFAULT_MODULI:
            raise FieldError(f"m must be in 1..{MAX_M}, got {m}")
        modulus = DEFAULT_MODULI[m]
    return FieldCtx(m=m, modulus=modulus)


def gf_mul(ctx: FieldCtx, a: int, b: int) -> int:
    """Product of two field elements."""
    return int(ctx.mul_table[ctx.check(a), ctx.check(b)])


def gf_inv(ctx: FieldCtx, a: int) -> int:
    """Multiplicative inverse; raises DivisionByZeroError for 0."""
    if ctx.check(a) == 0:
        raise DivisionByZeroError("0 has no inverse")
    return int(ctx.inv_table[a])


def as_matrix(rows: Sequence[Sequence[int]] | GFMatrix, cols: int | None = None) -> GFMatrix:
    """Coerce nested sequences to a 2-D uint8 matrix.

    cols is needed to give an empty row list a shape.
    """
    matrix = np.asarray(rows, dtype=np.uint8)
    if matrix.ndim == 1 and matrix.size == 0:
        return np.zeros((0, cols or 0), dtype=np.uint8)
    if matrix.ndim != 2:
        raise DimensionError(f"expected a matrix, got shape {matrix.shape}")
    return matrix


def scale(ctx: FieldCtx, c: int, v: GFVector) -> GFVector:
    """c·v for a scalar c."""
    return ctx.mul_table[c][v]


def mat_vec(ctx: FieldCtx, matrix: GFMatrix, v: GFVector) -> GFVector:
    """Matrix-vector product over F_{2^m}."""
    if matrix.shape[1] != len(v):
        raise DimensionError(f"matrix has {matrix.shape[1]} columns, vector has {len(v)}")
    products = ctx.mul_table[matrix, np.asarray(v, dtype=np.uint8)[np.newaxis, :]]
    return np.bitwise_xor.reduce(products, axis=1).astype(np.uint8)


def rref(ctx: FieldCtx, matrix: GFMatrix) -> tuple[GFMatrix, tuple[int, ...]]:
    """Reduced row-echelon form and pivot columns.

    Pivots are chosen at the leftmost nonzero column, topmost candidate row,
    and every pivot is scaled to 1, so equal row spaces give equal output.
    Zero rows are dropped.
    """
    work = np.array(matrix, dtype=np.uint8, copy=True)
    n_rows, n_cols = work.shape
    pivots: list[int] = []
    r = 0
    for col in range(n_cols):
        if r == n_rows:
            break
        candidates = np.flatnonzero(work[r:, col])
        if candidates.size == 0:
            continue
        p = r + int(candidates[0])
        if p != r:
            work[[r, p]] = work[[p, r]]
        work[r] = scale(ctx, ctx.inv_table[work[r, col]], work[r])
        factors = work[:, col].copy()
        factors[r] = 0
        hits = np.flatnonzero(factors)
        if hits.size:
            work[hits] ^= ctx.mul_table[factors[hits][:, np.newaxis], work[r][np.newaxis, :]]
        pivots.append(col)
        r += 1
    return work[:r], tuple(pivots)


def _kernel_from_rref(
    reduced: GFMatrix, pivots: tuple[int, ...], n_cols: int
) -> list[GFVector]:
    pivot_set = set(pivots)
    basis = []
    for free in range(n_cols):
        if free in pivot_set:
            continue
        v = np.zeros(n_cols, dtype=np.uint8)
        v[free] = 1
        # char 2: moving the free column across the equation keeps its sign
        for row, col in enumerate(pivots):
            v[col] = reduced[row, free]
        basis.append(v)
    return basis


def rref_kernel(ctx: FieldCtx, matrix: GFMatrix) -> tuple[int, list[GFVector]]:
    """Rank and a kernel basis, one vector per free column in column order."""
    matrix = as_matrix(matrix)
    reduced, pivots = rref(ctx, matrix)
    return len(pivots), _kernel_from_rref(reduced, pivots, matrix.shape[1])


@dataclass(frozen=True, slots=True)
class AffineSolution:
    """Solution set particular + span(kernel) of M·x = c.

    Attributes:
        particular: One solution, with every free coordinate zero.
        kernel: Basis of the homogeneous solution space.
    """

    particular: GFVector
    kernel: list[GFVector]

    @property
    def dimension(self) -> int:
        return len(self.kernel)


def solve_affine(
    ctx: FieldCtx, matrix: GFMatrix, c: Sequence[int] | GFVector
) -> AffineSolution | None:
    """Solve M·x = c; None when the system is inconsistent."""
    matrix = as_matrix(matrix)
    rhs = np.asarray(c, dtype=np.uint8)
    n_rows, n_cols = matrix.shape
    if rhs.shape != (n_rows,):
        raise DimensionError(f"right-hand side has length {rhs.size}, expected {n_rows}")

    augmented = np.hstack([matrix, rhs[:, np.newaxis]])
    reduced, pivots = rref(ctx, augmented)
    if pivots and pivots[-1] == n_cols:
        return None

    particular = np.zeros(n_cols, dtype=np.uint8)
    for row, col in enumerate(pivots):
        particular[col] = reduced[row, n_cols]
    kernel = _kernel_from_rref(reduced[:, :n_cols], pivots, n_cols)
    return AffineSolution(particular=particular, kernel=kernel)


def solution_vectors(ctx: FieldCtx, solution: AffineSolution) -> list[GFVector]:
    """Every vector of an affine solution set, sorted lexicographically."""
    vectors = []
    for coeffs in itertools.product(range(ctx.q), repeat=solution.dimension):
        v = solution.particular.copy()
        for coeff, basis_vector in zip(coeffs, solution.kernel, strict=True):
            if coeff:
                v ^= scale(ctx, coeff, basis_vector)
        vectors.append(v)
    vectors.sort(key=lambda vec: tuple(int(x) for x in vec))
    return vectors
