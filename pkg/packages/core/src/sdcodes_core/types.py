"""Interchange types for sdcodes.

A CodeDocument is the serialized form of one code: the field it lives over,
its generators as (x+1)-adic coefficient records, and where it came from.
JSON lines are the canonical encoding; CSV is a flat view for spreadsheets.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from typing import Any

from sdcodes_core.errors import DocumentError

SCHEMA_VERSION = 1


class Family(str, Enum):
    """Self-dual family a code belongs to."""

    type4 = "type4"
    h1zero = "h1zero"
    h1unit = "h1unit"


@dataclass(frozen=True, slots=True)
class GeneratorRecord:
    """One generator p0 + u·p1 + u²·p2.

    Attributes:
        u0: (x+1)-adic coefficients of the u^0 part, as field-element integers.
        u1: Same for the u^1 part.
        u2: Same for the u^2 part.
    """

    u0: tuple[int, ...]
    u1: tuple[int, ...]
    u2: tuple[int, ...]

    def to_dict(self) -> dict[str, list[int]]:
        return {"u0": list(self.u0), "u1": list(self.u1), "u2": list(self.u2)}

    def hex_packed(self, m: int) -> str:
        """Flatten to "u0|u1|u2" with each coefficient as fixed-width hex."""
        width = (m + 3) // 4
        return "|".join(
            "".join(f"{c:0{width}x}" for c in part) for part in (self.u0, self.u1, self.u2)
        )


@dataclass(frozen=True, slots=True)
class CodeMetadata:
    """Provenance of an enumerated code.

    Attributes:
        type_tag: Classification type 1-8.
        family: Self-dual family, or None for ad-hoc codes.
        a, t1, t2, k: Enumeration cell; unused entries are None.
    """

    type_tag: int | None = None
    family: Family | None = None
    a: int | None = None
    t1: int | None = None
    t2: int | None = None
    k: int | None = None

    def to_dict(self) -> dict[str, Any]:
        return {
            "type": self.type_tag,
            "family": self.family.value if self.family else None,
            "cell": {"a": self.a, "t1": self.t1, "t2": self.t2, "k": self.k},
        }


@dataclass(frozen=True, slots=True)
class CodeDocument:
    """A serialized code.

    Attributes:
        s: Length exponent; codes have length 2^s.
        m: Extension degree of the base field F_{2^m}.
        modulus: Irreducible modulus bits, constant term first (m + 1 entries).
        generators: Generator records.
        metadata: Provenance.
    """

    s: int
    m: int
    modulus: tuple[int, ...]
    generators: tuple[GeneratorRecord, ...]
    metadata: CodeMetadata = field(default_factory=CodeMetadata)

    def to_dict(self) -> dict[str, Any]:
        return {
            "schema": SCHEMA_VERSION,
            "s": self.s,
            "m": self.m,
            "modulus": list(self.modulus),
            "generators": [g.to_dict() for g in self.generators],
            "metadata": self.metadata.to_dict(),
        }

    def to_json(self) -> str:
        """Encode as a single JSON line."""
        return json.dumps(self.to_dict(), ensure_ascii=False, separators=(",", ":"))

    @classmethod
    def from_dict(cls, data: Any, record: int | None = None) -> CodeDocument:
        """Parse and validate a decoded JSON object.

        Raises:
            DocumentError: If any field is missing or out of range.
        """
        if not isinstance(data, dict):
            raise DocumentError("expected a JSON object", record)
        if data.get("schema") != SCHEMA_VERSION:
            raise DocumentError(f"unsupported schema {data.get('schema')!r}", record)

        try:
            s = int(data["s"])
            m = int(data["m"])
            modulus = tuple(int(b) for b in data["modulus"])
            raw_generators = data["generators"]
            meta = data.get("metadata") or {}
        except (KeyError, TypeError, ValueError) as e:
            raise DocumentError(f"missing or malformed field: {e}", record) from e

        if s < 1:
            raise DocumentError(f"s must be >= 1, got {s}", record)
        if not 1 <= m <= 8:
            raise DocumentError(f"m must be in 1..8, got {m}", record)
        if len(modulus) != m + 1 or any(b not in (0, 1) for b in modulus):
            raise DocumentError(f"modulus must be {m + 1} bits", record)
        if not isinstance(raw_generators, list):
            raise DocumentError("generators must be a list", record)

        n = 1 << s
        q = 1 << m
        generators = []
        for index, raw in enumerate(raw_generators):
            try:
                parts = tuple(tuple(int(c) for c in raw[key]) for key in ("u0", "u1", "u2"))
            except (KeyError, TypeError, ValueError) as e:
                raise DocumentError(f"generator {index}: {e}", record) from e
            for part in parts:
                if len(part) != n:
                    raise DocumentError(
                        f"generator {index}: expected {n} coefficients, got {len(part)}", record
                    )
                if any(not 0 <= c < q for c in part):
                    raise DocumentError(
                        f"generator {index}: coefficient outside F_{q}", record
                    )
            generators.append(GeneratorRecord(*parts))

        try:
            cell = meta.get("cell") or {}
            family = meta.get("family")
            metadata = CodeMetadata(
                type_tag=meta.get("type"),
                family=Family(family) if family else None,
                a=cell.get("a"),
                t1=cell.get("t1"),
                t2=cell.get("t2"),
                k=cell.get("k"),
            )
        except (AttributeError, ValueError) as e:
            raise DocumentError(f"malformed metadata: {e}", record) from e

        return cls(s=s, m=m, modulus=modulus, generators=tuple(generators), metadata=metadata)

    @classmethod
    def from_json(cls, line: str, record: int | None = None) -> CodeDocument:
        """Parse one JSON line."""
        try:
            data = json.loads(line)
        except json.JSONDecodeError as e:
            raise DocumentError(f"invalid JSON: {e.msg}", record) from e
        return cls.from_dict(data, record)

    def csv_row(self) -> list[str]:
        """Flat row matching CSV_HEADER."""
        meta = self.metadata

        def _opt(value: int | None) -> str:
            return "" if value is None else str(value)

        return [
            meta.family.value if meta.family else "",
            _opt(meta.type_tag),
            _opt(meta.a),
            _opt(meta.t1),
            _opt(meta.t2),
            _opt(meta.k),
            str(self.s),
            str(self.m),
            "".join(str(b) for b in self.modulus),
            ";".join(g.hex_packed(self.m) for g in self.generators),
        ]


CSV_HEADER = ["family", "type", "a", "t1", "t2", "k", "s", "m", "modulus", "generators"]


def read_documents(lines: Any) -> list[CodeDocument]:
    """Parse a JSON-lines stream, skipping blank lines.

    Record numbers in errors are 1-based line numbers.
    """
    documents = []
    for number, line in enumerate(lines, start=1):
        if not line.strip():
            continue
        documents.append(CodeDocument.from_json(line, record=number))
    return documents
