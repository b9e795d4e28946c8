"""Tests for F_{2^m} arithmetic and linear algebra."""

import itertools

import numpy as np
import pytest

from sdcodes import (
    DEFAULT_MODULI,
    FieldCtx,
    field_ctx,
    gf_inv,
    gf_mul,
    mat_vec,
    rref,
    rref_kernel,
    solution_vectors,
    solve_affine,
)
from sdcodes._field import scale
from sdcodes_core import DimensionError, DivisionByZeroError, FieldError


def test_gf4_products(gf4: FieldCtx):
    """α·α = α + 1 and α·(α + 1) = 1 modulo α² + α + 1."""
    assert gf_mul(gf4, 2, 2) == 3
    assert gf_mul(gf4, 2, 3) == 1
    assert gf_mul(gf4, 0, 3) == 0


def test_gf8_product(gf8: FieldCtx):
    """α·α² = α + 1 modulo α³ + α + 1."""
    assert gf_mul(gf8, 2, 4) == 3


def test_inverse_round_trip():
    """Every nonzero element times its inverse is 1, for every supported m."""
    for m in range(1, 9):
        ctx = field_ctx(m)
        for a in range(1, ctx.q):
            assert gf_mul(ctx, a, gf_inv(ctx, a)) == 1


@pytest.mark.parametrize("m", [1, 2, 3])
def test_field_axioms_exhaustive(m: int):
    """Multiplication is associative and distributes over XOR."""
    ctx = field_ctx(m)
    for a, b, c in itertools.product(range(ctx.q), repeat=3):
        assert gf_mul(ctx, gf_mul(ctx, a, b), c) == gf_mul(ctx, a, gf_mul(ctx, b, c))
        assert gf_mul(ctx, a, b ^ c) == gf_mul(ctx, a, b) ^ gf_mul(ctx, a, c)


def test_scale(gf4: FieldCtx):
    """scale multiplies every entry by the scalar."""
    v = np.array([0, 1, 2, 3], dtype=np.uint8)
    assert scale(gf4, 2, v).tolist() == [gf_mul(gf4, 2, x) for x in range(4)]


def test_inverse_of_zero(gf4: FieldCtx):
    """Inverting 0 raises DivisionByZeroError, which is a FieldError."""
    with pytest.raises(DivisionByZeroError):
        gf_inv(gf4, 0)
    with pytest.raises(FieldError):
        gf_inv(gf4, 0)


def test_element_out_of_range(gf4: FieldCtx):
    """Elements must lie in [0, 2^m)."""
    with pytest.raises(DimensionError):
        gf_mul(gf4, 4, 1)


def test_multiplication_table_is_commutative():
    """The table built from each default modulus is symmetric."""
    for m in range(1, 6):
        ctx = field_ctx(m)
        assert np.array_equal(ctx.mul_table, ctx.mul_table.T)


def test_default_moduli_have_right_degree():
    """Every built-in modulus has degree m."""
    for m, modulus in DEFAULT_MODULI.items():
        assert modulus.bit_length() - 1 == m


def test_reducible_modulus_rejected():
    """x² + 1 = (x + 1)² is not a field modulus."""
    with pytest.raises(FieldError, match="divisible"):
        FieldCtx(m=2, modulus=0b101)


def test_modulus_without_constant_term_rejected():
    """x² + x has a zero constant term."""
    with pytest.raises(FieldError):
        FieldCtx(m=2, modulus=0b110)


def test_m_above_cap_rejected():
    """m is limited to 8."""
    with pytest.raises(FieldError):
        field_ctx(9)


def test_from_bits():
    """Bits are listed constant term first."""
    ctx = FieldCtx.from_bits([1, 1, 0, 1])
    assert ctx.m == 3
    assert ctx.modulus == 0b1011
    assert ctx.modulus_bits == (1, 1, 0, 1)


def test_field_ctx_is_cached():
    """field_ctx hands back the same object for the same arguments."""
    assert field_ctx(2) is field_ctx(2)


def test_format_element(gf4: FieldCtx):
    """Elements render as polynomials in α."""
    assert gf4.format(0) == "0"
    assert gf4.format(1) == "1"
    assert gf4.format(3) == "α+1"


def test_rref_over_gf2(gf2: FieldCtx):
    """Row reduction gives the unique reduced form and pivot columns."""
    reduced, pivots = rref(gf2, np.array([[1, 1, 0], [1, 0, 1]], dtype=np.uint8))
    assert pivots == (0, 1)
    assert reduced.tolist() == [[1, 0, 1], [0, 1, 1]]


def test_rref_drops_zero_rows(gf4: FieldCtx):
    """Dependent rows vanish from the output."""
    matrix = np.array([[2, 1], [3, gf_mul(gf4, 3, gf_inv(gf4, 2))]], dtype=np.uint8)
    reduced, pivots = rref(gf4, matrix)
    assert pivots == (0,)
    assert reduced.shape == (1, 2)
    assert reduced[0, 0] == 1


def test_rref_kernel(gf2: FieldCtx):
    """Rank plus kernel dimension equals the column count."""
    rank, kernel = rref_kernel(gf2, np.array([[1, 1, 0], [1, 0, 1]], dtype=np.uint8))
    assert rank == 2
    assert [v.tolist() for v in kernel] == [[1, 1, 1]]


def test_kernel_vectors_are_in_kernel(gf8: FieldCtx, rng: np.random.Generator):
    """M·v = 0 for every returned basis vector."""
    matrix = rng.integers(0, gf8.q, size=(4, 7)).astype(np.uint8)
    rank, kernel = rref_kernel(gf8, matrix)
    assert rank + len(kernel) == 7
    for v in kernel:
        assert not mat_vec(gf8, matrix, v).any()


def test_mat_vec(gf4: FieldCtx):
    """α·α + 1·1 = α."""
    result = mat_vec(gf4, np.array([[2, 1]], dtype=np.uint8), np.array([2, 1], dtype=np.uint8))
    assert result.tolist() == [2]


def test_mat_vec_shape_mismatch(gf2: FieldCtx):
    """Column count must match the vector length."""
    with pytest.raises(DimensionError):
        mat_vec(gf2, np.zeros((2, 3), dtype=np.uint8), np.zeros(2, dtype=np.uint8))


def test_solve_affine_inconsistent(gf2: FieldCtx):
    """x + y = 0 and x + y = 1 has no solution."""
    matrix = np.array([[1, 1], [1, 1]], dtype=np.uint8)
    assert solve_affine(gf2, matrix, [0, 1]) is None


def test_solve_affine_solution_set(gf2: FieldCtx):
    """x + y = 1 has exactly (0, 1) and (1, 0), in lexicographic order."""
    solution = solve_affine(gf2, np.array([[1, 1]], dtype=np.uint8), [1])
    assert solution is not None
    assert solution.dimension == 1
    assert [v.tolist() for v in solution_vectors(gf2, solution)] == [[0, 1], [1, 0]]


def test_solution_count_over_extension(gf4: FieldCtx):
    """One free variable over F_4 gives four solutions."""
    solution = solve_affine(gf4, np.array([[1, 2, 0]], dtype=np.uint8), [3])
    assert solution is not None
    vectors = solution_vectors(gf4, solution)
    assert len(vectors) == gf4.q ** 2
    for v in vectors:
        assert mat_vec(gf4, np.array([[1, 2, 0]], dtype=np.uint8), v).tolist() == [3]


@pytest.mark.parametrize("m", [1, 2])
def test_solve_affine_matches_brute_force(m: int, rng: np.random.Generator):
    """The solution set equals an exhaustive search, and None means no solution."""
    ctx = field_ctx(m)
    seen_empty = seen_solvable = False
    for _ in range(60):
        rows = int(rng.integers(1, 5))
        cols = int(rng.integers(1, 5))
        matrix = rng.integers(0, ctx.q, size=(rows, cols)).astype(np.uint8)
        c = rng.integers(0, ctx.q, size=rows).astype(np.uint8)
        expected = [
            v
            for v in itertools.product(range(ctx.q), repeat=cols)
            if mat_vec(ctx, matrix, np.array(v, dtype=np.uint8)).tolist() == c.tolist()
        ]
        solution = solve_affine(ctx, matrix, c)
        if not expected:
            assert solution is None
            seen_empty = True
            continue
        assert solution is not None
        found = [tuple(int(x) for x in v) for v in solution_vectors(ctx, solution)]
        assert found == expected
        seen_solvable = True
    assert seen_empty and seen_solvable
