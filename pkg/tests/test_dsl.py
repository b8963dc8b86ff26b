import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sketchrec.dsl import (
    AngleBetween,
    Closed,
    DomainLibrary,
    DomainSpec,
    EqualLength,
    LengthRatio,
    Parallel,
    Perpendicular,
    ShapeSpec,
    builtin_library,
    parse_domain_file,
    parse_library,
    render_library,
    validate,
)
from sketchrec.errors import DslError, DslSyntaxError, DslValidationError

MINIMAL = """
domain Flowchart {
  shape Rectangle {
    lines 4;
    constraints {
      closed;
      perpendicular 1 2;
      perpendicular 2 3;
      perpendicular 3 4;
    }
    display "Rectangle";
    report angles;
  }
}
"""


class TestParse:
    def test_minimal_file(self):
        domain = parse_domain_file(MINIMAL)
        assert domain.name == "Flowchart"
        assert len(domain.shapes) == 1
        shape = domain.shapes[0]
        assert shape.name == "Rectangle"
        assert (shape.min_lines, shape.max_lines) == (4, 4)
        assert len(shape.constraints) == 4
        assert shape.display_label == "Rectangle"
        assert shape.report == ("angles",)

    def test_defaults_materialized(self):
        shape = parse_domain_file(MINIMAL).shapes[0]
        assert shape.constraints[0] == Closed(gap_tol_px=10.0, gap_tol_fraction=0.10)
        assert shape.constraints[1] == Perpendicular(1, 2, tol_deg=15.0)

    def test_index_out_of_range(self):
        text = MINIMAL.replace("perpendicular 3 4;", "perpendicular 1 9;")
        with pytest.raises(DslValidationError, match="outside 1..4"):
            parse_library(text)

    def test_empty_file_is_syntax_error(self):
        with pytest.raises(DslSyntaxError, match="at least one domain"):
            parse_library("")
        with pytest.raises(DslSyntaxError):
            parse_library("   # only a comment\n")

    def test_unknown_constraint(self):
        text = MINIMAL.replace("closed;", "wavy 1 2;")
        with pytest.raises(DslSyntaxError, match="unknown constraint"):
            parse_library(text)

    def test_lines_range(self):
        text = """
        domain D { shape Poly { lines 2..6; constraints { } } }
        """
        shape = parse_domain_file(text).shapes[0]
        assert (shape.min_lines, shape.max_lines) == (2, 6)
        assert shape.display_label == "Poly"
        assert shape.report == ()

    def test_explicit_tolerances(self):
        text = """
        domain D {
          shape S {
            lines 2;
            constraints {
              closed tol 25;
              perpendicular 1 2 tol 5.5;
              equal_length 1 2 tol 0.1;
              angle 1 2 60 tol 2;
              length_ratio 1 2 1.5;
            }
          }
        }
        """
        shape = parse_domain_file(text).shapes[0]
        assert shape.constraints[0] == Closed(gap_tol_px=25.0, gap_tol_fraction=0.0)
        assert shape.constraints[1] == Perpendicular(1, 2, tol_deg=5.5)
        assert shape.constraints[2] == EqualLength(1, 2, tol_ratio=0.1)
        assert shape.constraints[3] == AngleBetween(1, 2, 60.0, tol_deg=2.0)
        assert shape.constraints[4] == LengthRatio(1, 2, 1.5, tol_ratio=0.20)

    def test_equal_indices_rejected(self):
        text = MINIMAL.replace("perpendicular 1 2;", "perpendicular 2 2;")
        with pytest.raises(DslValidationError, match="must differ"):
            parse_library(text)

    def test_duplicate_shape_names_rejected(self):
        text = """
        domain D {
          shape S { lines 1; constraints { } }
          shape S { lines 2; constraints { } }
        }
        """
        with pytest.raises(DslValidationError, match="duplicate shape"):
            parse_library(text)

    def test_duplicate_domain_names_rejected(self):
        text = """
        domain D { shape A { lines 1; constraints { } } }
        domain D { shape B { lines 1; constraints { } } }
        """
        with pytest.raises(DslValidationError, match="duplicate domain"):
            parse_library(text)

    def test_unknown_report_property(self):
        text = MINIMAL.replace("report angles;", "report speed;")
        with pytest.raises(DslValidationError, match="speed"):
            parse_library(text)

    def test_multi_domain_file_rejected_by_single_domain_parse(self):
        text = """
        domain A { shape S { lines 1; constraints { } } }
        domain B { shape S { lines 1; constraints { } } }
        """
        assert len(parse_library(text).domains) == 2
        with pytest.raises(DslValidationError, match="exactly one"):
            parse_domain_file(text)

    def test_syntax_errors_carry_line_numbers(self):
        try:
            parse_library("domain D {\n  shape S {\n    lines ;\n")
        except DslSyntaxError as exc:
            assert exc.line == 3
        else:
            pytest.fail("expected a syntax error")

    def test_comments_ignored(self):
        text = "# header\n" + MINIMAL.replace("lines 4;", "lines 4; # four sides")
        assert parse_domain_file(text).shapes[0].min_lines == 4


class TestBuiltin:
    def test_contains_flowchart_rectangle(self, library):
        rect = library.find_shape("Flowchart", "Rectangle")
        assert rect.min_lines == rect.max_lines == 4
        assert rect.closed

    def test_contains_angle_reporting_shape(self, library):
        assert any(
            "angles" in shape.report for _, shape in library.iter_shapes()
        )
        angle = library.find_shape("Mathematics", "Angle")
        assert angle.min_lines == 2 and not angle.closed

    def test_contains_mathematics_triangle(self, library):
        triangle = library.find_shape("Mathematics", "Triangle")
        assert triangle.min_lines == 3 and triangle.closed

    def test_builtin_validates(self, library):
        assert validate(library) == []


class TestValidate:
    def test_duplicate_domain_diagnostic(self):
        d = DomainSpec("Math", (ShapeSpec("S", 1, 1, (), "S"),))
        diags = validate(DomainLibrary((d, d)))
        assert len(diags) == 1
        assert "duplicate domain" in diags[0]

    def test_line_range_diagnostic(self):
        shape = ShapeSpec("S", 0, 0, (), "S")
        diags = validate(DomainLibrary((DomainSpec("D", (shape,)),)))
        assert any("invalid line range" in d for d in diags)

    def test_constraint_diagnostics_carry_path(self):
        shape = ShapeSpec("S", 2, 2, (Perpendicular(1, 5),), "S")
        diags = validate(DomainLibrary((DomainSpec("D", (shape,)),)))
        assert diags == ["domain D / shape S: line index 5 outside 1..2"]


class TestRoundTrip:
    def test_builtin_round_trip(self, library):
        assert parse_library(render_library(library)) == library

    def test_minimal_round_trip(self):
        lib = parse_library(MINIMAL)
        assert parse_library(render_library(lib)) == lib


names = st.from_regex(r"[A-Za-z][A-Za-z0-9_]{0,8}", fullmatch=True)
tols = st.sampled_from([0.0, 0.5, 1.0, 5.0, 12.5, 15.0, 20.0])
ratio_tols = st.sampled_from([0.0, 0.05, 0.2, 0.35])


@st.composite
def shape_specs(draw):
    name = draw(names)
    min_lines = draw(st.integers(1, 4))
    max_lines = draw(st.integers(min_lines, 6))
    n_constraints = draw(st.integers(0, 4))
    constraints = []
    for _ in range(n_constraints):
        kind = draw(st.sampled_from(["closed", "perp", "par", "eq", "angle", "ratio"]))
        if kind == "closed":
            constraints.append(draw(st.sampled_from([Closed(), Closed(25.0, 0.0)])))
            continue
        i = draw(st.integers(1, max_lines))
        j = draw(st.integers(1, max_lines).filter(lambda v: v != i))
        if kind == "perp":
            constraints.append(Perpendicular(i, j, draw(tols)))
        elif kind == "par":
            constraints.append(Parallel(i, j, draw(tols)))
        elif kind == "eq":
            constraints.append(EqualLength(i, j, draw(ratio_tols)))
        elif kind == "angle":
            constraints.append(AngleBetween(i, j, draw(st.sampled_from([30.0, 90.0, 120.5, 180.0])), draw(tols)))
        else:
            constraints.append(LengthRatio(i, j, draw(st.sampled_from([0.5, 1.0, 2.0, 3.5])), draw(ratio_tols)))
    display = draw(st.text(alphabet=st.characters(min_codepoint=32, max_codepoint=126), max_size=12))
    n_report = draw(st.integers(0, 3))
    report = tuple(("angles", "lengths", "closure_gap")[:n_report])
    return ShapeSpec(name, min_lines, max_lines, tuple(constraints), display, report)


@st.composite
def libraries(draw):
    n_domains = draw(st.integers(1, 3))
    domain_names = draw(st.lists(names, min_size=n_domains, max_size=n_domains, unique=True))
    domains = []
    for dname in domain_names:
        n_shapes = draw(st.integers(1, 3))
        shapes = []
        used = set()
        for _ in range(n_shapes):
            shape = draw(shape_specs().filter(lambda s: s.name not in used))
            used.add(shape.name)
            shapes.append(shape)
        domains.append(DomainSpec(dname, tuple(shapes)))
    return DomainLibrary(tuple(domains))


@given(libraries())
@settings(max_examples=60)
def test_render_parse_round_trip_property(library):
    assert parse_library(render_library(library)) == library


@given(st.text(max_size=200))
@settings(max_examples=300)
def test_fuzz_never_crashes(text):
    try:
        parse_library(text)
    except DslError:
        pass


@given(st.binary(max_size=120))
@settings(max_examples=200)
def test_fuzz_random_bytes(data):
    try:
        parse_library(data.decode("utf-8", errors="replace"))
    except DslError:
        pass
