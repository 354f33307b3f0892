"""Batch tabulation of dihedral linking numbers over a CSV knot list."""

from __future__ import annotations

import csv
import io
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Sequence, TextIO

from .coloring import equivalence_classes, fox_colorings
from .errors import DihedralLinkingError
from .knot import diagram_from_braid
from .linking import dln, format_value, parse_value, sort_values


@dataclass(frozen=True)
class KnotRecord:
    name: str
    braid: str
    determinant: int | None = None


@dataclass
class TabulationRow:
    name: str
    p: int
    values: list
    per_coloring: list[tuple[tuple[int, ...], list]] = field(default_factory=list)


@dataclass
class KnotOutcome:
    record: KnotRecord
    row: TabulationRow | None = None
    error: str | None = None


def read_knot_csv(handle: TextIO) -> tuple[list[KnotRecord], list[tuple[str, str]]]:
    """Records plus ``(name, message)`` for lines that could not be read."""
    reader = csv.DictReader(handle)
    if reader.fieldnames is None or not {"name", "braid"} <= set(reader.fieldnames):
        raise DihedralLinkingError("knot CSV needs a header with 'name' and 'braid' columns")
    records, errors = [], []
    for lineno, raw in enumerate(reader, start=2):
        name = (raw.get("name") or "").strip()
        braid = (raw.get("braid") or "").strip()
        if not name:
            errors.append((f"line {lineno}", "missing knot name"))
            continue
        det_text = (raw.get("determinant") or "").strip()
        det = None
        if det_text:
            try:
                det = int(det_text)
            except ValueError:
                errors.append((name, f"bad determinant {det_text!r}"))
                continue
        records.append(KnotRecord(name, braid, det))
    return records, errors


def tabulate_knot(record: KnotRecord, p: int, mirror: bool = False) -> TabulationRow | None:
    """Deduplicated linking numbers over every p-coloring class, or None if not p-colorable."""
    d = diagram_from_braid(record.braid, mirror=mirror)
    classes = equivalence_classes(fox_colorings(d, p))
    if not classes:
        return None
    per_coloring = []
    union = set()
    for col in classes:
        multiset = dln(d, col).multiset
        per_coloring.append((col.colors, multiset))
        union.update(multiset)
    return TabulationRow(record.name, p, sort_values(union), per_coloring)


def _work(args) -> KnotOutcome:
    record, p, mirror = args
    try:
        return KnotOutcome(record, row=tabulate_knot(record, p, mirror))
    except DihedralLinkingError as exc:
        return KnotOutcome(record, error=f"{type(exc).__name__}: {exc}")


def run(
    records: Sequence[KnotRecord], p: int, jobs: int = 1, mirror: bool = False
) -> list[KnotOutcome]:
    """Process every record; results come back in input order whatever ``jobs`` is."""
    tasks = [(r, p, mirror) for r in records]
    if jobs <= 1 or len(tasks) <= 1:
        return [_work(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_work, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))


def join_values(values: Iterable) -> str:
    return ", ".join(format_value(v) for v in values)


def split_values(text: str) -> list:
    return [parse_value(t) for t in text.split(",") if t.strip()]


def _per_coloring_text(row: TabulationRow) -> str:
    return "; ".join(
        f"{','.join(map(str, colors))}: [{join_values(ms)}]" for colors, ms in row.per_coloring
    )


def format_rows(rows: Sequence[TabulationRow], fmt: str = "csv", per_coloring: bool = False) -> str:
    out = io.StringIO()
    if fmt == "csv":
        writer = csv.writer(out, lineterminator="\n")
        header = ["name", "p", "values"] + (["per_coloring"] if per_coloring else [])
        writer.writerow(header)
        for row in rows:
            line = [row.name, row.p, join_values(row.values)]
            if per_coloring:
                line.append(_per_coloring_text(row))
            writer.writerow(line)
    elif fmt == "text":
        width = max((len(r.name) for r in rows), default=0)
        for row in rows:
            out.write(f"{row.name.ljust(width)} | {join_values(row.values)}\n")
            if per_coloring:
                for colors, ms in row.per_coloring:
                    out.write(f"{' ' * width}   {','.join(map(str, colors))}: {join_values(ms)}\n")
    else:
        raise ValueError(f"unknown format {fmt!r}")
    return out.getvalue()


def read_rows(handle: TextIO) -> list[TabulationRow]:
    """Parse tabulation CSV written by :func:`format_rows`."""
    rows = []
    for raw in csv.DictReader(handle):
        rows.append(TabulationRow(raw["name"], int(raw["p"]), split_values(raw["values"])))
    return rows
