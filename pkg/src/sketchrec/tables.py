"""Export and import of the per-stroke database tables.

Per stroke k four CSV files are written, mirroring the table layout of the
original desktop tool: ``sketch{k}.csv`` (ID,X,Y), ``sketch{k}cat.csv`` and
``sketch{k}catm.csv`` (ID,CAT: raw and smoothed categories), and
``sketch{k}segment.csv`` (ID,X1,Y1,X2,Y2). Files use LF line endings and
no quoting so fixtures stay diffable.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Mapping, Sequence

from .errors import TableConsistencyError, TableFormatError
from .model import Point, SketchDocument, Stroke
from .segmentation import Segment

POINTS_HEADER = "ID,X,Y"
CATEGORY_HEADER = "ID,CAT"
SEGMENT_HEADER = "ID,X1,Y1,X2,Y2"


def table_paths(out_dir, stroke_id: int) -> dict[str, Path]:
    base = Path(out_dir)
    return {
        "points": base / f"sketch{stroke_id}.csv",
        "cat": base / f"sketch{stroke_id}cat.csv",
        "catm": base / f"sketch{stroke_id}catm.csv",
        "segment": base / f"sketch{stroke_id}segment.csv",
    }


def _write_rows(path: Path, header: str, rows: Iterable[Sequence[int]]) -> None:
    lines = [header]
    lines.extend(",".join(str(v) for v in row) for row in rows)
    path.write_text("\n".join(lines) + "\n", encoding="utf-8", newline="\n")


def write_points_table(path, points: Sequence[Point]) -> None:
    _write_rows(Path(path), POINTS_HEADER, ((i + 1, p.x, p.y) for i, p in enumerate(points)))


def write_category_table(path, categories: Sequence[int]) -> None:
    _write_rows(Path(path), CATEGORY_HEADER, ((i + 1, c) for i, c in enumerate(categories)))


def write_segment_table(path, segments: Sequence[Segment]) -> None:
    _write_rows(
        Path(path),
        SEGMENT_HEADER,
        ((s.index, s.start.x, s.start.y, s.end.x, s.end.y) for s in segments),
    )


def export_tables(
    document: SketchDocument,
    segments: Mapping[int, Sequence[Segment]],
    categories: Mapping[int, Sequence[int]],
    smoothed: Mapping[int, Sequence[int]],
    out_dir,
) -> list[Path]:
    """Write the four tables for every stroke present in all three mappings.

    Category lists must have one entry per adjacent point pair of the
    (deduplicated) stroke; mismatches raise TableConsistencyError.
    """
    by_id = {s.id: s for s in document.strokes}
    for sid in set(segments) | set(categories) | set(smoothed):
        if sid not in by_id:
            raise TableConsistencyError(f"stroke id {sid} not present in the document")

    written: list[Path] = []
    out = Path(out_dir)
    for stroke in document.strokes:
        sid = stroke.id
        if sid not in segments or sid not in categories or sid not in smoothed:
            continue
        cats = list(categories[sid])
        catms = list(smoothed[sid])
        segs = list(segments[sid])
        n_pairs = len(stroke.points) - 1
        if len(cats) != n_pairs:
            raise TableConsistencyError(
                f"stroke {sid}: expected {n_pairs} categories, got {len(cats)}"
            )
        if len(catms) != len(cats):
            raise TableConsistencyError(
                f"stroke {sid}: smoothed category count {len(catms)} != raw {len(cats)}"
            )
        out.mkdir(parents=True, exist_ok=True)
        paths = table_paths(out, sid)
        write_points_table(paths["points"], stroke.points)
        write_category_table(paths["cat"], cats)
        write_category_table(paths["catm"], catms)
        write_segment_table(paths["segment"], segs)
        written.extend(paths.values())
    return written


def _read_rows(path, header: str, width: int) -> list[list[int]]:
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    lines = text.splitlines()
    if not lines or lines[0] != header:
        found = lines[0] if lines else "<empty file>"
        raise TableFormatError(f"{path.name}: expected header {header!r}, found {found!r}")
    rows = []
    for lineno, line in enumerate(lines[1:], start=2):
        if not line:
            continue
        cells = line.split(",")
        if len(cells) != width:
            raise TableFormatError(f"{path.name}:{lineno}: expected {width} columns, got {len(cells)}")
        try:
            row = [int(cell) for cell in cells]
        except ValueError:
            raise TableFormatError(f"{path.name}:{lineno}: non-integer cell in {line!r}") from None
        rows.append(row)
    return rows


def _check_ids(name: str, rows: list[list[int]]) -> None:
    for i, row in enumerate(rows, start=1):
        if row[0] != i:
            raise TableFormatError(f"{name}: row IDs must be consecutive from 1, found {row[0]} at row {i}")


def read_points_table(path) -> list[Point]:
    rows = _read_rows(path, POINTS_HEADER, 3)
    _check_ids(Path(path).name, rows)
    return [Point(x, y) for _, x, y in rows]


def read_category_table(path) -> list[int]:
    rows = _read_rows(path, CATEGORY_HEADER, 2)
    _check_ids(Path(path).name, rows)
    return [cat for _, cat in rows]


def read_segment_table(path) -> list[Segment]:
    rows = _read_rows(path, SEGMENT_HEADER, 5)
    _check_ids(Path(path).name, rows)
    return [Segment(i, Point(x1, y1), Point(x2, y2)) for i, x1, y1, x2, y2 in rows]


@dataclass(frozen=True)
class ImportedStroke:
    stroke: Stroke
    categories: tuple[int, ...]
    smoothed: tuple[int, ...]
    segments: tuple[Segment, ...]


def import_tables(directory, stroke_id: int) -> ImportedStroke:
    """Read the four tables of one stroke back; inverse of export_tables."""
    paths = table_paths(directory, stroke_id)
    for path in paths.values():
        if not path.exists():
            raise TableFormatError(f"missing table file {path}")
    points = read_points_table(paths["points"])
    return ImportedStroke(
        stroke=Stroke(stroke_id, tuple(points)),
        categories=tuple(read_category_table(paths["cat"])),
        smoothed=tuple(read_category_table(paths["catm"])),
        segments=tuple(read_segment_table(paths["segment"])),
    )
