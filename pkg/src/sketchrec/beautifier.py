"""Clean re-drawing of a matched shape.

The matched segments are converted to (direction, length) form and then:

1. directions within 15 degrees of a 45-degree multiple snap to it (the
   eight direction sectors of the segmentation make that the natural grid);
2. angle constraints (perpendicular / parallel / angle) are enforced
   exactly by rotating the higher-index segment of each pair;
3. length constraints collapse into groups whose sizes are fitted jointly;
4. closed shapes are closed exactly by the minimal length adjustment that
   keeps all enforced directions intact (a two-constraint least squares).

When the combination is unsatisfiable (conflicting constraints, a closure
that would need non-positive lengths) the result falls back to a
closure-only cleanup and carries ``degraded=True``.

Accepts either Segment objects or ((x1, y1), (x2, y2)) chord pairs, so a
beautified result can be fed back in; the output is a fixed point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping, Sequence

from .dsl import AngleBetween, EqualLength, LengthRatio, Parallel, Perpendicular, ShapeSpec
from .recognizer import Chord, Interpretation, as_chord, features_from_chords, shape_properties

SNAP_GRID_DEG = 45.0
SNAP_TOL_DEG = 15.0

_ANGLE_KINDS = (Perpendicular, Parallel, AngleBetween)
_SQRT_HALF = math.sqrt(0.5)

# Exact unit vectors for the eight grid directions, indexed by deg / 45.
_GRID_UNITS = (
    (1.0, 0.0),
    (_SQRT_HALF, _SQRT_HALF),
    (0.0, 1.0),
    (-_SQRT_HALF, _SQRT_HALF),
    (-1.0, 0.0),
    (-_SQRT_HALF, -_SQRT_HALF),
    (0.0, -1.0),
    (_SQRT_HALF, -_SQRT_HALF),
)


@dataclass(frozen=True)
class BeautifiedShape:
    vertices: tuple[tuple[float, float], ...]
    closed: bool
    label: str
    properties: Mapping[str, tuple[float, ...]]
    degraded: bool = False


def _circular_delta(a: float, b: float) -> float:
    """Signed smallest rotation from b to a, in (-180, 180] degrees."""
    return (a - b + 180.0) % 360.0 - 180.0


def _snap(theta: float) -> float:
    grid = round(theta / SNAP_GRID_DEG) * SNAP_GRID_DEG
    if abs(_circular_delta(theta, grid)) <= SNAP_TOL_DEG:
        return grid
    return theta


def _unit(deg: float) -> tuple[float, float]:
    """Unit vector of a direction; exact on the 45-degree grid."""
    wrapped = deg % 360.0
    if wrapped % SNAP_GRID_DEG == 0.0:
        return _GRID_UNITS[int(wrapped // SNAP_GRID_DEG) % 8]
    r = math.radians(deg)
    return (math.cos(r), math.sin(r))


def _nearest_candidate(current: float, candidates: Sequence[float]) -> float:
    return min(candidates, key=lambda c: (abs(_circular_delta(current, c)), c))


class _LengthGroups:
    """Union-find over segment indices with a length multiplier per member."""

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.mult = [1.0] * n  # length_k = mult[k] * length_of(parent[k])

    def find(self, k: int) -> tuple[int, float]:
        if self.parent[k] == k:
            return k, 1.0
        root, _ = self.find(self.parent[k])
        if self.parent[k] != root:
            self.mult[k] *= self.mult[self.parent[k]]
            self.parent[k] = root
        return root, self.mult[k]

    def union(self, i: int, j: int, ratio: float) -> bool:
        """Record length_i = ratio * length_j; False on a conflicting cycle."""
        ri, mi = self.find(i)
        rj, mj = self.find(j)
        if ri == rj:
            return math.isclose(mi, ratio * mj, rel_tol=1e-9, abs_tol=1e-12)
        self.parent[ri] = rj
        self.mult[ri] = ratio * mj / mi
        return True


def _solve_closure(
    group_members: list[list[int]],
    multipliers: list[float],
    targets: list[float],
    weights: list[float],
    units: list[tuple[float, float]],
) -> list[float] | None:
    """Minimal weighted adjustment of group lengths so the polygon closes.

    Solves min sum(w_g (t_g - target_g)^2) subject to sum(len_k u_k) = 0
    with len_k = multipliers[k] * t_{group(k)}. Returns per-group lengths or
    None when the normal system degenerates.
    """
    cols = []
    for members in group_members:
        ax = sum(multipliers[k] * units[k][0] for k in members)
        ay = sum(multipliers[k] * units[k][1] for k in members)
        cols.append((ax, ay))
    rx = sum(c[0] * t for c, t in zip(cols, targets))
    ry = sum(c[1] * t for c, t in zip(cols, targets))

    m00 = sum(c[0] * c[0] / w for c, w in zip(cols, weights))
    m01 = sum(c[0] * c[1] / w for c, w in zip(cols, weights))
    m11 = sum(c[1] * c[1] / w for c, w in zip(cols, weights))
    det = m00 * m11 - m01 * m01
    trace = m00 + m11
    if trace <= 0.0:
        # No usable direction at all; feasible only if already closed.
        lam = (0.0, 0.0)
    elif det > 1e-12 * trace * trace:
        lam = ((m11 * rx - m01 * ry) / det, (m00 * ry - m01 * rx) / det)
    else:
        # Rank one: solve along the principal direction; the closure check
        # after the rebuild catches anything left over.
        d = (m00, m01) if m00 >= m11 else (m01, m11)
        denom = d[0] * (m00 * d[0] + m01 * d[1]) + d[1] * (m01 * d[0] + m11 * d[1])
        if denom <= 0.0:
            return None
        scale = (d[0] * rx + d[1] * ry) / denom
        lam = (scale * d[0], scale * d[1])

    return [
        t - (c[0] * lam[0] + c[1] * lam[1]) / w
        for c, t, w in zip(cols, targets, weights)
    ]


def _rebuild(
    v0: tuple[float, float], units: list[tuple[float, float]], lengths: list[float]
) -> list[tuple[float, float]]:
    vertices = [v0]
    x, y = v0
    for (ux, uy), length in zip(units, lengths):
        x += length * ux
        y += length * uy
        vertices.append((x, y))
    return vertices


def _chords_of(vertices: list[tuple[float, float]], closed: bool) -> list[Chord]:
    if closed:
        ring = vertices + [vertices[0]]
        return [(ring[k], ring[k + 1]) for k in range(len(vertices))]
    return [(vertices[k], vertices[k + 1]) for k in range(len(vertices) - 1)]


def _finish(
    vertices: list[tuple[float, float]],
    closed: bool,
    spec: ShapeSpec,
    degraded: bool,
) -> BeautifiedShape:
    chords = _chords_of(vertices, closed)
    properties = shape_properties(spec, features_from_chords(chords))
    return BeautifiedShape(
        vertices=tuple(vertices),
        closed=closed,
        label=spec.display_label,
        properties=properties,
        degraded=degraded,
    )


def _closure_only_cleanup(chords: list[Chord], spec: ShapeSpec) -> BeautifiedShape:
    """Fallback: distribute the closure error equally across the vertices."""
    chain = [chords[0][0]] + [c[1] for c in chords]
    closed = spec.closed
    if closed:
        n = len(chords)
        ex = chain[-1][0] - chain[0][0]
        ey = chain[-1][1] - chain[0][1]
        chain = [(x - ex * k / n, y - ey * k / n) for k, (x, y) in enumerate(chain)]
        chain = chain[:-1]
    return _finish(chain, closed, spec, degraded=True)


def beautify(interp: Interpretation, segments: Sequence, spec: ShapeSpec) -> BeautifiedShape:
    """Re-draw a matched stroke so the spec's constraints hold exactly."""
    if interp.shape_name != spec.name:
        raise ValueError(f"interpretation {interp.shape_name!r} does not match spec {spec.name!r}")
    chords = [as_chord(s) for s in segments]
    n = len(chords)
    closed = spec.closed
    v0 = chords[0][0]
    dirs = [math.degrees(math.atan2(b[1] - a[1], b[0] - a[0])) for a, b in chords]
    measured = [math.dist(a, b) for a, b in chords]

    angle_constraints = [c for c in spec.constraints if isinstance(c, _ANGLE_KINDS)]
    derived = {max(c.i, c.j) - 1 for c in angle_constraints}

    for k in range(n):
        if k not in derived:
            dirs[k] = _snap(dirs[k])

    for c in sorted(angle_constraints, key=lambda c: max(c.i, c.j)):
        ref = dirs[min(c.i, c.j) - 1]
        target = max(c.i, c.j) - 1
        if isinstance(c, Perpendicular):
            candidates = (ref + 90.0, ref - 90.0)
        elif isinstance(c, Parallel):
            candidates = (ref, ref + 180.0)
        else:
            delta = 180.0 - c.degrees
            candidates = (ref + delta, ref - delta)
        dirs[target] = _nearest_candidate(dirs[target], candidates)

    # Conflicting constraints on one target surface as a residual deviation.
    for c in angle_constraints:
        rel = abs(_circular_delta(dirs[c.i - 1], dirs[c.j - 1]))
        line_angle = min(rel, 180.0 - rel)
        if isinstance(c, Perpendicular):
            dev = abs(90.0 - line_angle)
        elif isinstance(c, Parallel):
            dev = line_angle
        else:
            dev = abs((180.0 - rel) - c.degrees)
        if dev > 1e-9:
            return _closure_only_cleanup(chords, spec)

    groups_uf = _LengthGroups(n)
    for c in spec.constraints:
        if isinstance(c, EqualLength):
            ok = groups_uf.union(c.i - 1, c.j - 1, 1.0)
        elif isinstance(c, LengthRatio):
            ok = groups_uf.union(c.i - 1, c.j - 1, c.ratio)
        else:
            continue
        if not ok:
            return _closure_only_cleanup(chords, spec)

    roots: list[int] = []
    members: dict[int, list[int]] = {}
    multipliers = [0.0] * n
    for k in range(n):
        root, mult = groups_uf.find(k)
        multipliers[k] = mult
        if root not in members:
            members[root] = []
            roots.append(root)
        members[root].append(k)
    group_members = [members[r] for r in roots]
    weights = [sum(multipliers[k] ** 2 for k in g) for g in group_members]
    targets = [
        sum(multipliers[k] * measured[k] for k in g) / w
        for g, w in zip(group_members, weights)
    ]

    units = [_unit(d) for d in dirs]
    if closed:
        solved = _solve_closure(group_members, multipliers, targets, weights, units)
        if solved is None:
            return _closure_only_cleanup(chords, spec)
        targets = solved

    group_of = {}
    for gi, g in enumerate(group_members):
        for k in g:
            group_of[k] = gi
    lengths = [multipliers[k] * targets[group_of[k]] for k in range(n)]
    if min(lengths) <= 1e-6:
        return _closure_only_cleanup(chords, spec)

    vertices = _rebuild(v0, units, lengths)
    if closed:
        gap = math.dist(vertices[-1], vertices[0])
        if gap > 1e-9 * max(1.0, max(lengths)):
            return _closure_only_cleanup(chords, spec)
        vertices = vertices[:-1]

    return _finish(vertices, closed, spec, degraded=False)
