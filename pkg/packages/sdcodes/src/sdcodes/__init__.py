"""sdcodes - Self-dual cyclic codes of length 2^s over F_{2^m}[u]/(u^3).

Arithmetic in F_{2^m} and the chain ring K = F_{2^m}[x]/((x+1)^{2^s}),
the eight canonical generator types of cyclic codes, span-based duality,
closed-form enumeration of every self-dual code, and brute-force oracles
that cross-check the closed forms.
"""

from sdcodes._chain import (
    Basis,
    KPoly,
    binom_mod2,
    format_kpoly,
    kpoly_convert,
    kpoly_inv_unit,
    kpoly_mul,
    kpoly_recip,
    kpoly_sub_inverse,
    kpoly_val_unit,
    pascal_mod2,
    shift_expand,
)
from sdcodes._codec import (
    code_label,
    document_from_code,
    document_from_generators,
    format_code,
    generators_from_document,
    poly_from_record,
    record_from_poly,
    write_csv,
)
from sdcodes._duality import (
    IdealSpan,
    annihilator_span,
    dual_span,
    is_self_dual,
    multiplication_matrix,
    span_build,
    torsion_from_span,
)
from sdcodes._enumerate import (
    BinomMatrix,
    CellCount,
    CountReport,
    MatrixKind,
    SelfDualCode,
    admissible_cells,
    annihilator_generators,
    build_K,
    build_M,
    build_N,
    build_T,
    c_vector,
    cell_tau,
    count_N,
    count_Nprime,
    dedup_by_span,
    enumerate_all,
    enumerate_h1_unit,
    enumerate_h1_zero,
    h1_solution_count,
    h1_solutions,
    h3_generator,
    nullity_T,
    selfdual_conditions,
    selfdual_type4,
)
from sdcodes._field import (
    DEFAULT_MODULI,
    MAX_M,
    AffineSolution,
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
from sdcodes._oracle import (
    BRANCH_LABELS,
    OracleReport,
    SampleResult,
    branch_labels,
    iter_canonical_specs,
    oracle_check,
    oracle_dual_consistency,
    oracle_exhaustive,
    sample_specs,
    verify_generators,
)
from sdcodes._ring import (
    CodeForm,
    CodeSpec,
    RingPoly,
    StructDegrees,
    TorsionProfile,
    code_make,
    format_generators,
    format_rpoly,
    generators,
    mu_reduce,
    principal_generators,
    rpoly_mul,
    struct_degrees,
    struct_L_U,
    struct_V,
    struct_W,
    torsion_profile,
    type7_generators,
    v_branch,
    validate,
    violations,
    w_branch,
)
from sdcodes._table import TABLE1_ROWS, TableDiff, TableRow, printed_split, table1_diff
from sdcodes._version import __version__

__all__ = [
    "BRANCH_LABELS",
    "DEFAULT_MODULI",
    "MAX_M",
    "TABLE1_ROWS",
    "AffineSolution",
    "Basis",
    "BinomMatrix",
    "CellCount",
    "CodeForm",
    "CodeSpec",
    "CountReport",
    "FieldCtx",
    "IdealSpan",
    "KPoly",
    "MatrixKind",
    "OracleReport",
    "RingPoly",
    "SampleResult",
    "SelfDualCode",
    "StructDegrees",
    "TableDiff",
    "TableRow",
    "TorsionProfile",
    "__version__",
    "admissible_cells",
    "annihilator_generators",
    "annihilator_span",
    "binom_mod2",
    "branch_labels",
    "build_K",
    "build_M",
    "build_N",
    "build_T",
    "c_vector",
    "cell_tau",
    "code_label",
    "code_make",
    "count_N",
    "count_Nprime",
    "dedup_by_span",
    "document_from_code",
    "document_from_generators",
    "dual_span",
    "enumerate_all",
    "enumerate_h1_unit",
    "enumerate_h1_zero",
    "field_ctx",
    "format_code",
    "format_generators",
    "format_kpoly",
    "format_rpoly",
    "generators",
    "generators_from_document",
    "gf_inv",
    "gf_mul",
    "h1_solution_count",
    "h1_solutions",
    "h3_generator",
    "is_self_dual",
    "iter_canonical_specs",
    "kpoly_convert",
    "kpoly_inv_unit",
    "kpoly_mul",
    "kpoly_recip",
    "kpoly_sub_inverse",
    "kpoly_val_unit",
    "mat_vec",
    "mu_reduce",
    "multiplication_matrix",
    "nullity_T",
    "oracle_check",
    "oracle_dual_consistency",
    "oracle_exhaustive",
    "pascal_mod2",
    "poly_from_record",
    "printed_split",
    "principal_generators",
    "record_from_poly",
    "rpoly_mul",
    "rref",
    "rref_kernel",
    "sample_specs",
    "selfdual_conditions",
    "selfdual_type4",
    "shift_expand",
    "solution_vectors",
    "solve_affine",
    "span_build",
    "struct_L_U",
    "struct_V",
    "struct_W",
    "struct_degrees",
    "table1_diff",
    "torsion_from_span",
    "torsion_profile",
    "type7_generators",
    "v_branch",
    "validate",
    "verify_generators",
    "violations",
    "w_branch",
    "write_csv",
]
