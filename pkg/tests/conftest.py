"""Shared fixtures: published table data and synthetic stroke builders."""

import pytest

from sketchrec.dsl import builtin_library
from sketchrec.model import Point, SketchDocument, Stroke
from sketchrec.segmentation import Segment

# Rows 1-21 of the published Sketch1 points table (the table is truncated
# in the source; the full stroke is only available as its segment table).
FIG11_POINTS = [
    (102, 30), (102, 34), (102, 41), (100, 59), (99, 77), (99, 80), (99, 83),
    (99, 85), (99, 86), (99, 87), (99, 89), (99, 92), (99, 94), (99, 96),
    (99, 100), (99, 103), (99, 105), (99, 108), (99, 110), (99, 112), (99, 114),
]

# The 20-row CAT column of the Sketch1CAT table; the published smoothing
# pass (Sketch1CATM) overwrites all of these with 4.
FIG12_CATEGORIES = [4, 4, 6, 6, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4]

# The 7-row Sketch1SEGMENT table: (x1, y1, x2, y2) per segment.
FIG14_SEGMENT_ROWS = [
    (102, 30, 99, 123),
    (99, 123, 140, 125),
    (140, 125, 150, 130),
    (150, 130, 171, 129),
    (171, 129, 162, 45),
    (162, 45, 160, 30),
    (160, 30, 98, 27),
]

# Endpoints of the collinear merge of the rows above (derived by the
# perpendicular-deviation oracle in test_segmentation).
FIG14_MERGED_CHAIN = [(102, 30), (99, 123), (171, 129), (160, 30), (98, 27)]


def fig14_segments() -> list[Segment]:
    return [
        Segment(i + 1, Point(x1, y1), Point(x2, y2))
        for i, (x1, y1, x2, y2) in enumerate(FIG14_SEGMENT_ROWS)
    ]


def walk(start, moves, stroke_id=1) -> Stroke:
    """Stroke from a start point and a list of (dx, dy) moves."""
    points = [Point(*start)]
    for dx, dy in moves:
        points.append(Point(points[-1].x + dx, points[-1].y + dy))
    return Stroke(stroke_id, tuple(points))


def rectangle_stroke(x=0, y=0, width=40, height=30, step=2, stroke_id=1) -> Stroke:
    """Closed axis-aligned rectangle drawn right, down, left, up."""
    moves = []
    moves += [(step, 0)] * (width // step)
    moves += [(0, step)] * (height // step)
    moves += [(-step, 0)] * (width // step)
    moves += [(0, -step)] * (height // step)
    return walk((x, y), moves, stroke_id)


def triangle_stroke(x=0, y=0, stroke_id=1) -> Stroke:
    """Closed right-pointing triangle: base right, then two diagonals back."""
    moves = []
    moves += [(2, 0)] * 20
    moves += [(-1, 1)] * 20
    moves += [(-1, -1)] * 20
    return walk((x, y), moves, stroke_id)


def zigzag_stroke(corners=10, leg_moves=5, step=2, stroke_id=1) -> Stroke:
    """Open staircase zigzag with the given number of corners."""
    moves = []
    for leg in range(corners + 1):
        delta = (step, 0) if leg % 2 == 0 else (0, step)
        moves += [delta] * leg_moves
    return walk((0, 0), moves, stroke_id)


def l_stroke(stroke_id=1) -> Stroke:
    """20-point axis-aligned L: 10 points right, 10 points down."""
    moves = [(2, 0)] * 9 + [(0, 2)] * 10
    return walk((0, 0), moves, stroke_id)


def straight_stroke(n_points=50, stroke_id=1) -> Stroke:
    return walk((0, 0), [(3, 0)] * (n_points - 1), stroke_id)


def document_of(*strokes) -> SketchDocument:
    return SketchDocument(tuple(strokes))


@pytest.fixture
def library():
    return builtin_library()
