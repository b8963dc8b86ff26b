import math

import pytest

from sketchrec.beautifier import beautify
from sketchrec.dsl import Closed, parse_library
from sketchrec.model import Point
from sketchrec.recognizer import classify_segments, eval_constraint, features_from_chords, match_shape
from sketchrec.segmentation import Segment, merge_collinear

from conftest import fig14_segments


def beautified_chords(shape):
    vertices = list(shape.vertices)
    if shape.closed:
        ring = vertices + [vertices[0]]
    else:
        ring = vertices
    return [(ring[k], ring[k + 1]) for k in range(len(ring) - 1)]


def match_and_beautify(segments, library):
    chosen, _ = classify_segments(segments, library)
    assert chosen is not None
    spec = library.find_shape(chosen.domain_name, chosen.shape_name)
    return beautify(chosen, segments, spec), spec


def assert_constraints_exact(shape, spec, tol=1e-6):
    chords = beautified_chords(shape)
    f = features_from_chords(chords)
    for constraint in spec.constraints:
        satisfied, slack = eval_constraint(constraint, f, chords)
        assert satisfied, constraint
        assert slack < tol, constraint


class TestRectangle:
    def test_fig14_becomes_exact_axis_aligned_rectangle(self, library):
        segments = merge_collinear(fig14_segments())
        shape, spec = match_and_beautify(segments, library)
        assert not shape.degraded
        assert shape.closed
        assert len(shape.vertices) == 4

        # all four corners exactly 90 degrees
        for angle in shape.properties["angles"]:
            assert angle == pytest.approx(90.0, abs=1e-6)

        # axis-aligned: two distinct x values, two distinct y values
        xs = sorted({round(x, 9) for x, _ in shape.vertices})
        ys = sorted({round(y, 9) for _, y in shape.vertices})
        assert len(xs) == 2 and len(ys) == 2

        # closure forces opposite sides to the means of the measured sides
        lengths = [s.length for s in segments]
        vertical = (lengths[0] + lengths[2]) / 2
        horizontal = (lengths[1] + lengths[3]) / 2
        assert xs[1] - xs[0] == pytest.approx(horizontal, abs=1e-9)
        assert ys[1] - ys[0] == pytest.approx(vertical, abs=1e-9)
        assert shape.vertices[0] == (102.0, 30.0)

        assert_constraints_exact(shape, spec)

    def test_exact_square_is_fixed_point(self, library):
        square = [
            Segment(1, Point(0, 0), Point(100, 0)),
            Segment(2, Point(100, 0), Point(100, 100)),
            Segment(3, Point(100, 100), Point(0, 100)),
            Segment(4, Point(0, 100), Point(0, 0)),
        ]
        shape, _ = match_and_beautify(square, library)
        assert shape.vertices == ((0.0, 0.0), (100.0, 0.0), (100.0, 100.0), (0.0, 100.0))
        assert not shape.degraded


class TestAngle:
    def test_near_right_angle_arms_preserved(self, library):
        spec = library.find_shape("Mathematics", "Angle")
        segments = [
            Segment(1, Point(0, 0), Point(10, 0)),
            Segment(2, Point(10, 0), Point(11, 10)),
        ]
        interp = match_shape(spec, segments, "Mathematics")
        assert interp is not None
        shape = beautify(interp, segments, spec)
        assert shape.properties["angles"] == (90.0,)
        assert not shape.closed
        lengths = [math.dist(a, b) for a, b in beautified_chords(shape)]
        assert lengths[0] == pytest.approx(10.0)
        assert lengths[1] == pytest.approx(math.dist((10, 0), (11, 10)))

    def test_off_grid_directions_kept(self, library):
        # ~25-degree arm is more than 15 degrees from both 0 and 45: kept as-is
        spec = library.find_shape("Mathematics", "Angle")
        segments = [
            Segment(1, Point(0, 0), Point(100, 47)),
            Segment(2, Point(100, 47), Point(200, 46)),
        ]
        interp = match_shape(spec, segments, "Mathematics")
        shape = beautify(interp, segments, spec)
        (a, b), (b2, c) = beautified_chords(shape)
        first_dir = math.degrees(math.atan2(b[1] - a[1], b[0] - a[0]))
        assert first_dir == pytest.approx(math.degrees(math.atan2(47, 100)))
        second_dir = math.degrees(math.atan2(c[1] - b2[1], c[0] - b2[0]))
        assert second_dir == pytest.approx(0.0, abs=1e-9)


class TestTriangle:
    def test_triangle_closes_exactly(self, library):
        segments = [
            Segment(1, Point(0, 0), Point(40, 1)),
            Segment(2, Point(40, 1), Point(21, 22)),
            Segment(3, Point(21, 22), Point(1, 2)),
        ]
        shape, spec = match_and_beautify(segments, library)
        assert spec.name == "Triangle"
        assert shape.closed
        assert len(shape.vertices) == 3
        assert_constraints_exact(shape, spec)
        assert sum(shape.properties["angles"]) == pytest.approx(180.0)


class TestInvariants:
    CASES = None

    @staticmethod
    def cases(library):
        rect = merge_collinear(fig14_segments())
        tri = [
            Segment(1, Point(0, 0), Point(40, 1)),
            Segment(2, Point(40, 1), Point(21, 22)),
            Segment(3, Point(21, 22), Point(1, 2)),
        ]
        angle = [
            Segment(1, Point(0, 0), Point(10, 1)),
            Segment(2, Point(10, 1), Point(12, 12)),
        ]
        return [rect, tri, angle]

    def test_post_constraint_slack(self, library):
        for segments in self.cases(library):
            shape, spec = match_and_beautify(segments, library)
            assert not shape.degraded
            assert_constraints_exact(shape, spec)

    def test_idempotence(self, library):
        for segments in self.cases(library):
            shape, spec = match_and_beautify(segments, library)
            chords = beautified_chords(shape)
            interp = match_shape(spec, chords, "x")
            assert interp is not None
            again = beautify(interp, chords, spec)
            assert again.closed == shape.closed
            for (x1, y1), (x2, y2) in zip(shape.vertices, again.vertices):
                assert math.dist((x1, y1), (x2, y2)) <= 1e-9

    def test_bounded_movement(self, library):
        # Each vertex moves at most the accumulated length and rotation
        # adjustments of the chords before it (triangle inequality).
        for segments in self.cases(library):
            shape, spec = match_and_beautify(segments, library)
            source = [tuple(map(float, segments[0].start))] + [
                tuple(map(float, s.end)) for s in segments
            ]
            out_chords = beautified_chords(shape)
            budget = 0.0
            for k, segment in enumerate(segments):
                moved = math.dist(source[k], out_chords[k][0])
                assert moved <= budget + 1e-6, f"vertex {k} moved {moved} > {budget}"
                old_len = segment.length
                new_len = math.dist(*out_chords[k])
                old_dir = math.atan2(
                    segment.end.y - segment.start.y, segment.end.x - segment.start.x
                )
                new_dir = math.atan2(
                    out_chords[k][1][1] - out_chords[k][0][1],
                    out_chords[k][1][0] - out_chords[k][0][0],
                )
                turn = abs((new_dir - old_dir + math.pi) % (2 * math.pi) - math.pi)
                budget += abs(new_len - old_len) + old_len * turn


class TestDegraded:
    def test_unclosable_direction_fan_degrades(self):
        # All directions in one quadrant: the polygon cannot close with
        # positive lengths, so the closure-only fallback kicks in.
        library = parse_library(
            """
            domain Test {
              shape Fan { lines 3; constraints { closed tol 1000; } }
            }
            """
        )
        segments = [
            Segment(1, Point(0, 0), Point(40, 0)),
            Segment(2, Point(40, 0), Point(68, 28)),
            Segment(3, Point(68, 28), Point(68, 58)),
        ]
        shape, spec = match_and_beautify(segments, library)
        assert shape.degraded
        assert shape.closed
        assert len(shape.vertices) == 3
        # the fallback still closes the polygon ring exactly
        chords = beautified_chords(shape)
        assert chords[-1][1] == pytest.approx(chords[0][0])

    def test_conflicting_angle_targets_degrade(self):
        library = parse_library(
            """
            domain Test {
              shape Weird {
                lines 3;
                constraints {
                  perpendicular 1 3;
                  parallel 2 3;
                }
              }
            }
            """
        )
        # dirs roughly 0, 70, 78 degrees: both constraints hold within
        # tolerance, but segment 2 is too far off-grid to snap, so no
        # direction assignment satisfies both exactly
        segments = [
            Segment(1, Point(0, 0), Point(100, 0)),
            Segment(2, Point(100, 0), Point(134, 94)),
            Segment(3, Point(134, 94), Point(154, 190)),
        ]
        shape, spec = match_and_beautify(segments, library)
        assert shape.degraded
        assert not shape.closed
