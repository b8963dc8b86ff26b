"""Stroke segmentation: direction categories, smoothing, splitting, merging.

The per-pixel kernels (categorize, smooth, change detection) run in a
compiled extension when available and in a pure-Python twin otherwise;
``COMPILED_KERNELS`` reports which one was selected.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import (
    DegenerateSegmentError,
    InvalidSplitsError,
    StrokeTooShortError,
)
from .model import Point, Stroke, dedup_points

try:
    from . import _speedups as _impl

    COMPILED_KERNELS = True
except ImportError:  # extension not built; identical pure twin
    from . import _kernels as _impl

    COMPILED_KERNELS = False


@dataclass(frozen=True)
class SmoothingConfig:
    """Block size of the pixel-set smoothing pass (5 pixels by default)."""

    block_size: int = 5

    def __post_init__(self):
        if self.block_size < 1:
            raise ValueError(f"block_size must be >= 1, got {self.block_size}")


@dataclass(frozen=True)
class MergeConfig:
    """Maximum perpendicular deviation (pixels) for the collinear merge."""

    max_deviation: float = 5.0

    def __post_init__(self):
        if self.max_deviation < 0:
            raise ValueError(f"max_deviation must be >= 0, got {self.max_deviation}")


@dataclass(frozen=True)
class Segment:
    """A straight piece of a stroke; endpoints are captured pixels."""

    index: int
    start: Point
    end: Point

    def __post_init__(self):
        if self.index < 1:
            raise ValueError(f"segment index must be positive, got {self.index}")
        if self.start == self.end:
            raise ValueError("segment endpoints must differ")
        object.__setattr__(self, "start", Point(*self.start))
        object.__setattr__(self, "end", Point(*self.end))

    @property
    def length(self) -> float:
        return math.dist(self.start, self.end)

    @property
    def vector(self) -> tuple[int, int]:
        return (self.end.x - self.start.x, self.end.y - self.start.y)


def direction_category(p1: Point, p2: Point) -> int:
    """Direction case (1..8) of the move p1 -> p2, keyed on sign(dx), sign(dy).

    Raises ZeroDisplacementError when p1 == p2.
    """
    return _impl.categorize_pairs([p1[0], p2[0]], [p1[1], p2[1]])[0]


def categorize(stroke: Stroke) -> list[int]:
    """Direction category for every adjacent point pair of a deduplicated stroke."""
    xs = [p.x for p in stroke.points]
    ys = [p.y for p in stroke.points]
    return _impl.categorize_pairs(xs, ys)


def smooth(categories: list[int], cfg: SmoothingConfig = SmoothingConfig()) -> list[int]:
    """Overwrite each block of categories with the block's modal category."""
    return _impl.smooth_blocks(list(categories), cfg.block_size)


def split_points(smoothed: list[int]) -> list[int]:
    """Stroke point indices where the smoothed category changes."""
    return _impl.change_points(list(smoothed))


def extract_segments(stroke: Stroke, splits: list[int]) -> list[Segment]:
    """Cut the stroke at the given point indices into chained segments."""
    points = stroke.points
    n = len(points)
    if n < 2:
        raise StrokeTooShortError("need at least 2 points to extract segments")
    prev = 0
    for s in splits:
        if s <= prev or s >= n - 1:
            raise InvalidSplitsError(
                f"split indices must be strictly increasing within (0, {n - 1}), got {list(splits)}"
            )
        prev = s

    bounds = [0, *splits, n - 1]
    segments = []
    for i in range(len(bounds) - 1):
        a, b = bounds[i], bounds[i + 1]
        if points[a] == points[b]:
            raise DegenerateSegmentError(
                f"points {a} and {b} coincide; segment chord would be zero-length"
            )
        segments.append(Segment(i + 1, points[a], points[b]))
    return segments


def _deviation_ok(p: Point, a: Point, b: Point, max_dev: float) -> bool:
    # Squared perpendicular distance from p to line a-b, exact for integer
    # inputs so that max_deviation=0 admits only true collinearity.
    ax, ay = a
    bx, by = b
    chord2 = (bx - ax) ** 2 + (by - ay) ** 2
    if chord2 == 0:
        return False
    cross = (bx - ax) * (p[1] - ay) - (by - ay) * (p[0] - ax)
    return cross * cross <= (max_dev * max_dev) * chord2


def merge_collinear(segments: list[Segment], cfg: MergeConfig = MergeConfig()) -> list[Segment]:
    """Greedily merge runs of segments whose interior vertices stay within
    max_deviation pixels of the run's start-to-end chord."""
    if not segments:
        return []
    for left, right in zip(segments, segments[1:]):
        if left.end != right.start:
            raise ValueError("segments are not chained end-to-start")

    runs: list[tuple[Point, Point]] = []
    run_start = segments[0].start
    run_end = segments[0].end
    interior: list[Point] = []
    for seg in segments[1:]:
        candidate_interior = interior + [seg.start]
        if all(_deviation_ok(p, run_start, seg.end, cfg.max_deviation) for p in candidate_interior):
            interior = candidate_interior
            run_end = seg.end
        else:
            runs.append((run_start, run_end))
            run_start, run_end, interior = seg.start, seg.end, []
    runs.append((run_start, run_end))
    return [Segment(i + 1, s, e) for i, (s, e) in enumerate(runs)]


@dataclass(frozen=True)
class StrokePipelineResult:
    """All intermediate products of segmenting one stroke."""

    stroke: Stroke  # deduplicated
    categories: tuple[int, ...]
    smoothed: tuple[int, ...]
    splits: tuple[int, ...]
    raw_segments: tuple[Segment, ...]
    segments: tuple[Segment, ...]  # after collinear merge


def process_stroke(
    stroke: Stroke,
    smoothing: SmoothingConfig = SmoothingConfig(),
    merge: MergeConfig = MergeConfig(),
) -> StrokePipelineResult:
    """Run the full segmentation pipeline on one stroke."""
    deduped = dedup_points(stroke)
    if len(deduped.points) < 2:
        raise StrokeTooShortError(f"stroke {stroke.id} has fewer than 2 distinct points")
    cats = categorize(deduped)
    smoothed = smooth(cats, smoothing)
    splits = split_points(smoothed)
    raw = extract_segments(deduped, splits)
    merged = merge_collinear(raw, merge)
    return StrokePipelineResult(
        stroke=deduped,
        categories=tuple(cats),
        smoothed=tuple(smoothed),
        splits=tuple(splits),
        raw_segments=tuple(raw),
        segments=tuple(merged),
    )


def segment_stroke(
    stroke: Stroke,
    smoothing: SmoothingConfig = SmoothingConfig(),
    merge: MergeConfig = MergeConfig(),
) -> list[Segment]:
    """Segment a stroke into merged straight pieces (never an empty list)."""
    return list(process_stroke(stroke, smoothing, merge).segments)
