"""Shape recognition: feature extraction, constraint evaluation, selection.

Every stroke is segmented independently and its merged segments are checked
against every shape of every domain, in library order. All matches form the
candidate pool; the displayed interpretation is the one composed of the most
line primitives, ties going to the earliest library entry and then to the
smallest residual. No match means the stroke stays Undefined.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping, Sequence

from .dsl import (
    AngleBetween,
    Closed,
    Constraint,
    DomainLibrary,
    EqualLength,
    LengthRatio,
    Parallel,
    Perpendicular,
    ShapeSpec,
)
from .errors import ConstraintIndexError, SegmentationError
from .model import SketchDocument
from .segmentation import (
    MergeConfig,
    Segment,
    SmoothingConfig,
    process_stroke,
)

Chord = tuple[tuple[float, float], tuple[float, float]]


@dataclass(frozen=True)
class FeatureVector:
    """Displacement-based geometry of a chained segment list."""

    segment_count: int
    lengths: tuple[float, ...]
    turn_angles: tuple[float, ...]  # interior angle at each shared vertex, degrees
    wrap_angle: float | None  # interior angle closing last->first, for closed shapes
    closure_gap: float
    bbox_diagonal: float


@dataclass(frozen=True)
class Interpretation:
    domain_name: str
    shape_name: str
    primitive_count: int
    properties: Mapping[str, tuple[float, ...]]
    residual: float


@dataclass(frozen=True)
class RecognitionResult:
    stroke_id: int
    chosen: Interpretation | None  # None renders as "Undefined"
    candidates: tuple[Interpretation, ...]


def as_chord(segment) -> Chord:
    """Normalize a Segment or an ((x1, y1), (x2, y2)) pair to a float chord."""
    if isinstance(segment, Segment):
        return ((float(segment.start.x), float(segment.start.y)),
                (float(segment.end.x), float(segment.end.y)))
    (x1, y1), (x2, y2) = segment
    return ((float(x1), float(y1)), (float(x2), float(y2)))


def _direction(chord: Chord) -> tuple[float, float]:
    (x1, y1), (x2, y2) = chord
    return (x2 - x1, y2 - y1)


def _angle_between(v1: tuple[float, float], v2: tuple[float, float]) -> float:
    """Unsigned angle between two direction vectors, in [0, 180] degrees."""
    n1 = math.hypot(*v1)
    n2 = math.hypot(*v2)
    if n1 == 0 or n2 == 0:
        return 0.0
    cos = (v1[0] * v2[0] + v1[1] * v2[1]) / (n1 * n2)
    return math.degrees(math.acos(max(-1.0, min(1.0, cos))))


def interior_angle(v_in: tuple[float, float], v_out: tuple[float, float]) -> float:
    """Interior angle at a vertex between an incoming and outgoing direction.

    180 degrees is straight continuation; 90 a right-angle corner.
    """
    return 180.0 - _angle_between(v_in, v_out)


def features_from_chords(chords: Sequence[Chord]) -> FeatureVector:
    if not chords:
        raise ValueError("need at least one segment")
    for left, right in zip(chords, chords[1:]):
        if left[1] != right[0]:
            raise ValueError("segments are not chained end-to-start")
    lengths = tuple(math.dist(a, b) for a, b in chords)
    directions = [_direction(c) for c in chords]
    turn_angles = tuple(
        interior_angle(directions[k], directions[k + 1]) for k in range(len(chords) - 1)
    )
    wrap_angle = None
    if len(chords) >= 2:
        wrap_angle = interior_angle(directions[-1], directions[0])
    first_start = chords[0][0]
    last_end = chords[-1][1]
    closure_gap = math.dist(last_end, first_start)
    xs = [p[0] for c in chords for p in c]
    ys = [p[1] for c in chords for p in c]
    bbox_diagonal = math.hypot(max(xs) - min(xs), max(ys) - min(ys))
    return FeatureVector(
        segment_count=len(chords),
        lengths=lengths,
        turn_angles=turn_angles,
        wrap_angle=wrap_angle,
        closure_gap=closure_gap,
        bbox_diagonal=bbox_diagonal,
    )


def extract_features(segments: Sequence[Segment]) -> FeatureVector:
    """Lengths, interior turn angles, closure gap, and bbox diagonal."""
    return features_from_chords([as_chord(s) for s in segments])


def _slack(deviation: float, tolerance: float) -> tuple[bool, float]:
    if tolerance == 0:
        return (deviation == 0, 0.0 if deviation == 0 else math.inf)
    return (deviation <= tolerance, deviation / tolerance)


def eval_constraint(
    c: Constraint, f: FeatureVector, segments: Sequence
) -> tuple[bool, float]:
    """Check one constraint; returns (satisfied, slack).

    Slack is the measured deviation normalized by the constraint tolerance:
    0 when exactly ideal, 1 at the tolerance boundary.
    """
    if isinstance(c, Closed):
        tol = max(c.gap_tol_px, c.gap_tol_fraction * f.bbox_diagonal)
        return _slack(f.closure_gap, tol)

    for idx in (c.i, c.j):
        if not 1 <= idx <= f.segment_count:
            raise ConstraintIndexError(
                f"constraint references line {idx} but only {f.segment_count} segments exist"
            )
    if isinstance(c, (Perpendicular, Parallel, AngleBetween)):
        chords = [as_chord(segments[c.i - 1]), as_chord(segments[c.j - 1])]
        theta = _angle_between(_direction(chords[0]), _direction(chords[1]))
        if isinstance(c, Perpendicular):
            return _slack(abs(90.0 - theta), c.tol_deg)
        if isinstance(c, Parallel):
            return _slack(min(theta, 180.0 - theta), c.tol_deg)
        return _slack(abs((180.0 - theta) - c.degrees), c.tol_deg)
    if isinstance(c, EqualLength):
        li, lj = f.lengths[c.i - 1], f.lengths[c.j - 1]
        deviation = abs(li - lj) / max(li, lj)
        return _slack(deviation, c.tol_ratio)
    if isinstance(c, LengthRatio):
        measured = f.lengths[c.i - 1] / f.lengths[c.j - 1]
        deviation = abs(measured - c.ratio) / c.ratio
        return _slack(deviation, c.tol_ratio)
    raise TypeError(f"unknown constraint {c!r}")


def shape_properties(spec: ShapeSpec, f: FeatureVector) -> dict[str, tuple[float, ...]]:
    """The measured values named by the spec's report clause."""
    props: dict[str, tuple[float, ...]] = {}
    for name in spec.report:
        if name == "angles":
            angles = f.turn_angles
            if spec.closed and f.wrap_angle is not None:
                angles = angles + (f.wrap_angle,)
            props[name] = angles
        elif name == "lengths":
            props[name] = f.lengths
        elif name == "closure_gap":
            props[name] = (f.closure_gap,)
    return props


def match_shape(
    spec: ShapeSpec, segments: Sequence[Segment], domain_name: str = ""
) -> Interpretation | None:
    """Match segments against one shape spec; None when any check fails."""
    count = len(segments)
    if not spec.min_lines <= count <= spec.max_lines:
        return None
    for c in spec.constraints:
        if not isinstance(c, Closed) and (c.i > count or c.j > count):
            return None
    f = extract_features(segments)
    residual = 0.0
    for c in spec.constraints:
        satisfied, slack = eval_constraint(c, f, segments)
        if not satisfied:
            return None
        residual += slack
    return Interpretation(
        domain_name=domain_name,
        shape_name=spec.name,
        primitive_count=spec.min_lines,
        properties=shape_properties(spec, f),
        residual=residual,
    )


def classify_segments(
    segments: Sequence[Segment], library: DomainLibrary
) -> tuple[Interpretation | None, tuple[Interpretation, ...]]:
    """Evaluate every spec in library order and select one interpretation."""
    candidates: list[Interpretation] = []
    for domain, shape in library.iter_shapes():
        interp = match_shape(shape, segments, domain.name)
        if interp is not None:
            candidates.append(interp)
    if not candidates:
        return None, ()
    ranked = min(
        enumerate(candidates),
        key=lambda item: (-item[1].primitive_count, item[0], item[1].residual),
    )
    return ranked[1], tuple(candidates)


def recognize(
    document: SketchDocument,
    library: DomainLibrary,
    smoothing: SmoothingConfig = SmoothingConfig(),
    merge: MergeConfig = MergeConfig(),
) -> list[RecognitionResult]:
    """Segment and classify every stroke of a document independently."""
    results = []
    for stroke in document.strokes:
        try:
            segments = process_stroke(stroke, smoothing, merge).segments
        except SegmentationError:
            results.append(RecognitionResult(stroke.id, None, ()))
            continue
        chosen, candidates = classify_segments(segments, library)
        results.append(RecognitionResult(stroke.id, chosen, candidates))
    return results
