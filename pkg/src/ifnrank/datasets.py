"""Reading and writing TRIFN datasets.

Two formats are accepted. The line format has one record per line::

    # id; abscissae; w; u
    a; 0.5, 0.7, 0.9; 0.7; 0.2
    b; 0.1, 0.2, 0.3, 0.4; 0.3; 0.5

with ``#`` starting a comment. Three abscissae denote a triangular number. The
JSON format is an array of ``{"id": ..., "a": [...], "w": ..., "u": ...}``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable

from .core import Trifn, TrifnError


class DatasetError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)
        self.line = line


@dataclass(frozen=True)
class DatasetRecord:
    id: str
    abscissae: tuple[float, ...]
    w: float
    u: float

    def to_trifn(self) -> Trifn:
        a = self.abscissae
        if len(a) == 3:
            return Trifn.triangular(a[0], a[1], a[2], self.w, self.u)
        return Trifn(*a, self.w, self.u)


def _record(ident, abscissae, w, u, line=None) -> DatasetRecord:
    if not isinstance(ident, str) or not ident.strip():
        raise DatasetError("record id must be a non-empty string", line)
    try:
        a = tuple(float(v) for v in abscissae)
        w, u = float(w), float(u)
    except (TypeError, ValueError) as exc:
        raise DatasetError(f"non-numeric field: {exc}", line) from None
    if len(a) not in (3, 4):
        raise DatasetError(f"expected 3 or 4 abscissae, got {len(a)}", line)
    rec = DatasetRecord(ident.strip(), a, w, u)
    try:
        rec.to_trifn()
    except TrifnError as exc:
        raise DatasetError(f"invalid TRIFN {ident!r}: {exc}", line) from None
    return rec


def parse_lines(text: str) -> list[DatasetRecord]:
    records = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = [f.strip() for f in line.split(";")]
        if len(fields) != 4:
            raise DatasetError(f"expected 'id; a1,a2,a3[,a4]; w; u', got {raw.strip()!r}", lineno)
        ident, absc, w, u = fields
        records.append(_record(ident, absc.split(","), w, u, lineno))
    return records


def parse_json(text: str) -> list[DatasetRecord]:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DatasetError(f"invalid JSON: {exc.msg}", exc.lineno) from None
    if not isinstance(data, list):
        raise DatasetError("JSON dataset must be an array of records")
    records = []
    for i, item in enumerate(data):
        if not isinstance(item, dict) or not {"id", "a", "w", "u"} <= item.keys():
            raise DatasetError(f"record {i} must have fields id, a, w, u")
        if not isinstance(item["a"], list):
            raise DatasetError(f"record {i}: field 'a' must be a list")
        records.append(_record(item["id"], item["a"], item["w"], item["u"]))
    return records


def parse(text: str) -> list[DatasetRecord]:
    """Parse either format; JSON is recognised by a leading ``[``."""
    if text.lstrip().startswith("["):
        records = parse_json(text)
    else:
        records = parse_lines(text)
    if not records:
        raise DatasetError("dataset contains no records")
    ids = [r.id for r in records]
    dupes = sorted({i for i in ids if ids.count(i) > 1})
    if dupes:
        raise DatasetError(f"duplicate record ids: {', '.join(dupes)}")
    return records


def load(path: str | Path) -> list[DatasetRecord]:
    return parse(Path(path).read_text(encoding="utf-8"))


def dumps(records: Iterable[DatasetRecord], fmt: str = "lines") -> str:
    """Serialize records so that :func:`parse` returns them unchanged."""
    records = list(records)
    if fmt == "json":
        return json.dumps(
            [{"id": r.id, "a": list(r.abscissae), "w": r.w, "u": r.u} for r in records],
            indent=2,
        )
    if fmt != "lines":
        raise ValueError(f"unknown dataset format {fmt!r}")
    out = []
    for r in records:
        if any(c in r.id for c in ";#\n"):
            raise DatasetError(f"id {r.id!r} cannot be written in the line format")
        absc = ", ".join(repr(a) for a in r.abscissae)
        out.append(f"{r.id}; {absc}; {r.w!r}; {r.u!r}")
    return "\n".join(out) + "\n"
