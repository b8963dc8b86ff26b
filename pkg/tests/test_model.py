import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from sketchrec.errors import SketchFileError
from sketchrec.model import (
    Point,
    SketchDocument,
    Stroke,
    dedup_points,
    dump_document,
    parse_document,
)


def stroke_of(*pts, stroke_id=1):
    return Stroke(stroke_id, tuple(Point(x, y) for x, y in pts))


class TestDedup:
    def test_removes_consecutive_duplicates(self):
        s = dedup_points(stroke_of((0, 0), (0, 0), (1, 0)))
        assert [tuple(p) for p in s.points] == [(0, 0), (1, 0)]

    def test_single_point_unchanged(self):
        s = dedup_points(stroke_of((5, 5)))
        assert [tuple(p) for p in s.points] == [(5, 5)]

    def test_run_collapse(self):
        s = dedup_points(stroke_of((1, 1), (2, 2), (2, 2), (2, 2), (3, 3)))
        assert [tuple(p) for p in s.points] == [(1, 1), (2, 2), (3, 3)]

    def test_preserves_id(self):
        s = dedup_points(stroke_of((0, 0), (0, 0), stroke_id=7))
        assert s.id == 7

    @given(
        st.lists(
            st.tuples(st.integers(-100, 100), st.integers(-100, 100)),
            min_size=1,
            max_size=40,
        )
    )
    def test_idempotent(self, pts):
        once = dedup_points(stroke_of(*pts))
        assert dedup_points(once) == once
        # no two consecutive points equal
        assert all(a != b for a, b in zip(once.points, once.points[1:]))


class TestStrokeInvariants:
    def test_rejects_nonpositive_id(self):
        with pytest.raises(ValueError):
            stroke_of((0, 0), stroke_id=0)

    def test_rejects_empty_points(self):
        with pytest.raises(ValueError):
            Stroke(1, ())

    def test_document_rejects_duplicate_ids(self):
        with pytest.raises(ValueError):
            SketchDocument((stroke_of((0, 0)), stroke_of((1, 1))))


class TestParseDocument:
    def test_single_stroke(self):
        doc = parse_document('{"strokes": [{"id": 1, "points": [[0, 0], [1, 2], [3, 4]]}]}')
        assert len(doc.strokes) == 1
        assert [tuple(p) for p in doc.strokes[0].points] == [(0, 0), (1, 2), (3, 4)]

    def test_duplicate_ids_rejected(self):
        text = '{"strokes": [{"id": 1, "points": [[0,0]]}, {"id": 1, "points": [[1,1]]}]}'
        with pytest.raises(SketchFileError, match="duplicate stroke id"):
            parse_document(text)

    def test_empty_strokes_list_is_valid(self):
        doc = parse_document('{"strokes": []}')
        assert doc.strokes == ()

    def test_malformed_json_reports_position(self):
        with pytest.raises(SketchFileError) as exc_info:
            parse_document('{"strokes": [}')
        assert exc_info.value.line == 1
        assert exc_info.value.column is not None

    def test_fractional_coordinates_rejected(self):
        with pytest.raises(SketchFileError, match="integer"):
            parse_document('{"strokes": [{"id": 1, "points": [[0.5, 1]]}]}')

    def test_boolean_coordinates_rejected(self):
        with pytest.raises(SketchFileError, match="integer"):
            parse_document('{"strokes": [{"id": 1, "points": [[true, 1]]}]}')

    def test_nonpositive_id_rejected(self):
        with pytest.raises(SketchFileError, match="positive"):
            parse_document('{"strokes": [{"id": 0, "points": [[0, 0]]}]}')

    def test_canvas_parsed(self):
        doc = parse_document('{"strokes": [], "canvas": [640, 480]}')
        assert doc.canvas_size == (640, 480)

    def test_unknown_keys_rejected(self):
        with pytest.raises(SketchFileError, match="unknown"):
            parse_document('{"strokes": [], "layers": []}')

    def test_points_must_be_pairs(self):
        with pytest.raises(SketchFileError, match="pair"):
            parse_document('{"strokes": [{"id": 1, "points": [[1, 2, 3]]}]}')


coords = st.integers(-(10**6), 10**6)
strokes_strategy = st.lists(
    st.lists(st.tuples(coords, coords), min_size=1, max_size=20),
    min_size=0,
    max_size=6,
)


@given(strokes_strategy, st.none() | st.tuples(st.integers(1, 4000), st.integers(1, 4000)))
def test_dump_parse_round_trip(stroke_points, canvas):
    doc = SketchDocument(
        tuple(
            Stroke(i + 1, tuple(Point(x, y) for x, y in pts))
            for i, pts in enumerate(stroke_points)
        ),
        canvas,
    )
    assert parse_document(dump_document(doc)) == doc


def test_dump_is_valid_json():
    doc = SketchDocument((stroke_of((0, 0), (5, 5)),), (100, 100))
    data = json.loads(dump_document(doc))
    assert data["strokes"][0]["points"] == [[0, 0], [5, 5]]
    assert data["canvas"] == [100, 100]
