"""Stroke data types and the sketch document file format.

A sketch document is a JSON object: ``{"strokes": [{"id": 1, "points":
[[x, y], ...]}, ...], "canvas": [w, h]}`` with ``canvas`` optional.
Coordinates are integer screen pixels (y grows downward).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any, NamedTuple

from .errors import SketchFileError


class Point(NamedTuple):
    x: int
    y: int


@dataclass(frozen=True)
class Stroke:
    """One pointer-down to pointer-up gesture as an ordered pixel sequence."""

    id: int
    points: tuple[Point, ...]

    def __post_init__(self):
        if self.id < 1:
            raise ValueError(f"stroke id must be positive, got {self.id}")
        if not self.points:
            raise ValueError("stroke must contain at least one point")
        object.__setattr__(self, "points", tuple(Point(p[0], p[1]) for p in self.points))


@dataclass(frozen=True)
class SketchDocument:
    strokes: tuple[Stroke, ...]
    canvas_size: tuple[int, int] | None = None

    def __post_init__(self):
        object.__setattr__(self, "strokes", tuple(self.strokes))
        seen: set[int] = set()
        for stroke in self.strokes:
            if stroke.id in seen:
                raise ValueError(f"duplicate stroke id {stroke.id}")
            seen.add(stroke.id)


def dedup_points(stroke: Stroke) -> Stroke:
    """Collapse runs of identical consecutive points, preserving order."""
    points = [stroke.points[0]]
    for p in stroke.points[1:]:
        if p != points[-1]:
            points.append(p)
    if len(points) == len(stroke.points):
        return stroke
    return Stroke(stroke.id, tuple(points))


def _as_pixel(value: Any, what: str) -> int:
    # bool is an int subclass; reject it explicitly along with floats
    if isinstance(value, bool) or not isinstance(value, int):
        raise SketchFileError(f"{what} must be an integer, got {value!r}")
    return value


def parse_document(text: str) -> SketchDocument:
    """Parse sketch file content into a document.

    Raises SketchFileError with line/column for malformed JSON and without
    position for schema violations (wrong types, duplicate ids).
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SketchFileError(exc.msg, exc.lineno, exc.colno) from exc

    if not isinstance(data, dict):
        raise SketchFileError("top level must be an object")
    unknown = set(data) - {"strokes", "canvas"}
    if unknown:
        raise SketchFileError(f"unknown top-level keys: {sorted(unknown)}")
    raw_strokes = data.get("strokes")
    if not isinstance(raw_strokes, list):
        raise SketchFileError('"strokes" must be a list')

    strokes = []
    seen: set[int] = set()
    for idx, raw in enumerate(raw_strokes):
        if not isinstance(raw, dict):
            raise SketchFileError(f"stroke #{idx + 1} must be an object")
        sid = _as_pixel(raw.get("id"), f"stroke #{idx + 1} id")
        if sid < 1:
            raise SketchFileError(f"stroke #{idx + 1} id must be positive, got {sid}")
        if sid in seen:
            raise SketchFileError(f"duplicate stroke id {sid}")
        seen.add(sid)
        raw_points = raw.get("points")
        if not isinstance(raw_points, list) or not raw_points:
            raise SketchFileError(f"stroke {sid} needs a non-empty points list")
        points = []
        for p in raw_points:
            if not isinstance(p, list) or len(p) != 2:
                raise SketchFileError(f"stroke {sid}: each point must be a [x, y] pair")
            points.append(Point(_as_pixel(p[0], f"stroke {sid} x"), _as_pixel(p[1], f"stroke {sid} y")))
        strokes.append(Stroke(sid, tuple(points)))

    canvas = None
    if "canvas" in data:
        raw_canvas = data["canvas"]
        if not isinstance(raw_canvas, list) or len(raw_canvas) != 2:
            raise SketchFileError('"canvas" must be a [width, height] pair')
        w = _as_pixel(raw_canvas[0], "canvas width")
        h = _as_pixel(raw_canvas[1], "canvas height")
        if w < 1 or h < 1:
            raise SketchFileError("canvas dimensions must be positive")
        canvas = (w, h)

    return SketchDocument(tuple(strokes), canvas)


def document_to_dict(document: SketchDocument) -> dict:
    data: dict[str, Any] = {
        "strokes": [
            {"id": s.id, "points": [[p.x, p.y] for p in s.points]} for s in document.strokes
        ]
    }
    if document.canvas_size is not None:
        data["canvas"] = list(document.canvas_size)
    return data


def dump_document(document: SketchDocument) -> str:
    return json.dumps(document_to_dict(document), indent=2) + "\n"


def load_document(path) -> SketchDocument:
    with open(path, encoding="utf-8") as fh:
        return parse_document(fh.read())
