"""Conversion between ring objects and CodeDocuments, and text rendering."""

from __future__ import annotations

import csv
from collections.abc import Iterable, Sequence
from typing import TextIO

from sdcodes._chain import KPoly
from sdcodes._enumerate import SelfDualCode
from sdcodes._field import FieldCtx
from sdcodes._ring import RingPoly, format_generators
from sdcodes_core import (
    CSV_HEADER,
    CodeDocument,
    CodeMetadata,
    DocumentError,
    FieldError,
    GeneratorRecord,
)


def record_from_poly(g: RingPoly) -> GeneratorRecord:
    return GeneratorRecord(u0=g.p0.coeffs, u1=g.p1.coeffs, u2=g.p2.coeffs)


def poly_from_record(ctx: FieldCtx, s: int, record: GeneratorRecord) -> RingPoly:
    return RingPoly(*(KPoly(ctx, s, part) for part in (record.u0, record.u1, record.u2)))


def document_from_generators(
    ctx: FieldCtx, s: int, gens: Sequence[RingPoly], metadata: CodeMetadata | None = None
) -> CodeDocument:
    return CodeDocument(
        s=s,
        m=ctx.m,
        modulus=ctx.modulus_bits,
        generators=tuple(record_from_poly(g) for g in gens),
        metadata=metadata or CodeMetadata(),
    )


def document_from_code(code: SelfDualCode) -> CodeDocument:
    spec = code.spec
    return document_from_generators(spec.ctx, spec.s, code.generators(), code.metadata())


def generators_from_document(
    document: CodeDocument, record: int | None = None
) -> tuple[FieldCtx, list[RingPoly]]:
    """The field and generators a document describes.

    Raises:
        DocumentError: If the embedded modulus is not irreducible.
    """
    try:
        ctx = FieldCtx.from_bits(document.modulus)
    except FieldError as e:
        raise DocumentError(str(e), record) from e
    return ctx, [poly_from_record(ctx, document.s, g) for g in document.generators]


def code_label(code: SelfDualCode) -> str:
    """Short provenance label, e.g. "h1unit a=5 t1=3 t2=0 k=1"."""
    parts = [code.family.value]
    for name, value in zip(("a", "t1", "t2", "k"), code.cell, strict=True):
        if value is not None:
            parts.append(f"{name}={value}")
    return " ".join(parts)


def format_code(code: SelfDualCode) -> str:
    return format_generators(code.generators())


def write_csv(documents: Iterable[CodeDocument], stream: TextIO) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for document in documents:
        writer.writerow(document.csv_row())
