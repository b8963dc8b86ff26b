"""The shape description language: parsing, validation, rendering.

Grammar (comments run from ``#`` to end of line, files are UTF-8)::

    library    := domain+
    domain     := "domain" IDENT "{" shape+ "}"
    shape      := "shape" IDENT "{"
                    "lines" INT [".." INT] ";"
                    "constraints" "{" constraint* "}"
                    ["display" STRING ";"]
                    ["report" IDENT ("," IDENT)* ";"]
                  "}"
    constraint := ( "closed"
                  | "perpendicular" INT INT
                  | "parallel" INT INT
                  | "equal_length" INT INT
                  | "angle" INT INT NUMBER
                  | "length_ratio" INT INT NUMBER
                  ) ["tol" NUMBER] ";"

Omitted tolerances default to +/-15 degrees for angle-like constraints,
20% relative deviation for length-like constraints, and for ``closed`` a
gap of at most max(10 px, 10% of the bounding-box diagonal). An explicit
``closed tol N`` fixes the gap tolerance to N pixels.

Line indices are 1-based in drawing order of the merged segments.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Iterator, Union

from .errors import DslSyntaxError, DslValidationError

DEFAULT_ANGLE_TOL_DEG = 15.0
DEFAULT_RATIO_TOL = 0.20
DEFAULT_GAP_TOL_PX = 10.0
DEFAULT_GAP_TOL_FRACTION = 0.10

REPORTABLE_PROPERTIES = ("angles", "lengths", "closure_gap")


# ---------------------------------------------------------------------------
# Spec types
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Closed:
    gap_tol_px: float = DEFAULT_GAP_TOL_PX
    gap_tol_fraction: float = DEFAULT_GAP_TOL_FRACTION


@dataclass(frozen=True)
class Perpendicular:
    i: int
    j: int
    tol_deg: float = DEFAULT_ANGLE_TOL_DEG


@dataclass(frozen=True)
class Parallel:
    i: int
    j: int
    tol_deg: float = DEFAULT_ANGLE_TOL_DEG


@dataclass(frozen=True)
class EqualLength:
    i: int
    j: int
    tol_ratio: float = DEFAULT_RATIO_TOL


@dataclass(frozen=True)
class AngleBetween:
    i: int
    j: int
    degrees: float
    tol_deg: float = DEFAULT_ANGLE_TOL_DEG


@dataclass(frozen=True)
class LengthRatio:
    i: int
    j: int
    ratio: float
    tol_ratio: float = DEFAULT_RATIO_TOL


Constraint = Union[Closed, Perpendicular, Parallel, EqualLength, AngleBetween, LengthRatio]


@dataclass(frozen=True)
class ShapeSpec:
    name: str
    min_lines: int
    max_lines: int
    constraints: tuple[Constraint, ...]
    display_label: str
    report: tuple[str, ...] = ()

    @property
    def closed(self) -> bool:
        return any(isinstance(c, Closed) for c in self.constraints)


@dataclass(frozen=True)
class DomainSpec:
    name: str
    shapes: tuple[ShapeSpec, ...]


@dataclass(frozen=True)
class DomainLibrary:
    domains: tuple[DomainSpec, ...]

    def iter_shapes(self) -> Iterator[tuple[DomainSpec, ShapeSpec]]:
        for domain in self.domains:
            for shape in domain.shapes:
                yield domain, shape

    def find_shape(self, domain_name: str, shape_name: str) -> ShapeSpec:
        for domain in self.domains:
            if domain.name == domain_name:
                for shape in domain.shapes:
                    if shape.name == shape_name:
                        return shape
        raise KeyError(f"{domain_name}/{shape_name}")


# ---------------------------------------------------------------------------
# Tokenizer
# ---------------------------------------------------------------------------

_PUNCT = {"{": "LBRACE", "}": "RBRACE", ";": "SEMI", ",": "COMMA"}


def _is_digit(ch: str) -> bool:
    # ASCII only; str.isdigit also accepts unicode digits that int() rejects
    return "0" <= ch <= "9"


@dataclass(frozen=True)
class _Token:
    kind: str  # IDENT INT NUMBER STRING LBRACE RBRACE SEMI COMMA DOTDOT EOF
    value: object
    line: int
    column: int


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    line, col = 1, 1
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch in " \t\r":
            i += 1
            col += 1
            continue
        if ch == "#":
            while i < n and text[i] != "\n":
                i += 1
            continue
        start_line, start_col = line, col
        if ch in _PUNCT:
            tokens.append(_Token(_PUNCT[ch], ch, start_line, start_col))
            i += 1
            col += 1
            continue
        if ch == "." and i + 1 < n and text[i + 1] == ".":
            tokens.append(_Token("DOTDOT", "..", start_line, start_col))
            i += 2
            col += 2
            continue
        if ch == '"':
            i += 1
            col += 1
            buf = []
            while i < n and text[i] != '"':
                if text[i] == "\n":
                    raise DslSyntaxError("unterminated string", start_line, start_col)
                if text[i] == "\\" and i + 1 < n and text[i + 1] in ('"', "\\"):
                    buf.append(text[i + 1])
                    i += 2
                    col += 2
                else:
                    buf.append(text[i])
                    i += 1
                    col += 1
            if i >= n:
                raise DslSyntaxError("unterminated string", start_line, start_col)
            i += 1
            col += 1
            tokens.append(_Token("STRING", "".join(buf), start_line, start_col))
            continue
        if _is_digit(ch) or (ch == "-" and i + 1 < n and _is_digit(text[i + 1])):
            j = i + 1 if ch == "-" else i
            while j < n and _is_digit(text[j]):
                j += 1
            is_float = False
            if j + 1 < n and text[j] == "." and _is_digit(text[j + 1]):
                is_float = True
                j += 1
                while j < n and _is_digit(text[j]):
                    j += 1
            raw = text[i:j]
            kind = "NUMBER" if is_float else "INT"
            value = float(raw) if is_float else int(raw)
            tokens.append(_Token(kind, value, start_line, start_col))
            col += j - i
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(_Token("IDENT", text[i:j], start_line, start_col))
            col += j - i
            i = j
            continue
        raise DslSyntaxError(f"unexpected character {ch!r}", start_line, start_col)
    tokens.append(_Token("EOF", None, line, col))
    return tokens


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------

class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0

    @property
    def current(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        tok = self.current
        self.pos += 1
        return tok

    def expect(self, kind: str, what: str | None = None) -> _Token:
        tok = self.current
        if tok.kind != kind:
            expected = what or kind.lower()
            raise DslSyntaxError(f"expected {expected}, found {tok.value!r}", tok.line, tok.column)
        return self.advance()

    def expect_keyword(self, word: str) -> _Token:
        tok = self.current
        if tok.kind != "IDENT" or tok.value != word:
            raise DslSyntaxError(f"expected {word!r}, found {tok.value!r}", tok.line, tok.column)
        return self.advance()

    def at_keyword(self, word: str) -> bool:
        return self.current.kind == "IDENT" and self.current.value == word

    def fail(self, message: str, tok: _Token | None = None):
        tok = tok or self.current
        raise DslValidationError([f"line {tok.line}, column {tok.column}: {message}"])

    def parse_number(self, what: str) -> float:
        tok = self.current
        if tok.kind not in ("INT", "NUMBER"):
            raise DslSyntaxError(f"expected {what}, found {tok.value!r}", tok.line, tok.column)
        self.advance()
        return float(tok.value)

    def parse_library(self) -> DomainLibrary:
        domains = []
        names: set[str] = set()
        while not self.current.kind == "EOF":
            tok = self.current
            domain = self.parse_domain()
            if domain.name in names:
                self.fail(f"duplicate domain name {domain.name!r}", tok)
            names.add(domain.name)
            domains.append(domain)
        if not domains:
            tok = self.current
            raise DslSyntaxError("expected at least one domain", tok.line, tok.column)
        return DomainLibrary(tuple(domains))

    def parse_domain(self) -> DomainSpec:
        self.expect_keyword("domain")
        name = self.expect("IDENT", "domain name").value
        self.expect("LBRACE", "'{'")
        shapes = []
        names: set[str] = set()
        while not self.current.kind == "RBRACE":
            tok = self.current
            shape = self.parse_shape()
            if shape.name in names:
                self.fail(f"duplicate shape name {shape.name!r} in domain {name!r}", tok)
            names.add(shape.name)
            shapes.append(shape)
        self.expect("RBRACE", "'}'")
        if not shapes:
            self.fail(f"domain {name!r} must declare at least one shape")
        return DomainSpec(str(name), tuple(shapes))

    def parse_shape(self) -> ShapeSpec:
        self.expect_keyword("shape")
        name = str(self.expect("IDENT", "shape name").value)
        self.expect("LBRACE", "'{'")

        lines_tok = self.expect_keyword("lines")
        min_lines = int(self.expect("INT", "line count").value)
        max_lines = min_lines
        if self.current.kind == "DOTDOT":
            self.advance()
            max_lines = int(self.expect("INT", "maximum line count").value)
        self.expect("SEMI", "';'")
        if not 1 <= min_lines <= max_lines:
            self.fail(f"shape {name!r}: invalid line range {min_lines}..{max_lines}", lines_tok)

        self.expect_keyword("constraints")
        self.expect("LBRACE", "'{'")
        constraints = []
        while not self.current.kind == "RBRACE":
            constraints.append(self.parse_constraint(name, max_lines))
        self.expect("RBRACE", "'}'")

        display = name
        if self.at_keyword("display"):
            self.advance()
            display = str(self.expect("STRING", "display label").value)
            self.expect("SEMI", "';'")

        report: list[str] = []
        if self.at_keyword("report"):
            self.advance()
            while True:
                tok = self.expect("IDENT", "property name")
                prop = str(tok.value)
                if prop not in REPORTABLE_PROPERTIES:
                    self.fail(f"unknown reportable property {prop!r}", tok)
                if prop in report:
                    self.fail(f"duplicate report property {prop!r}", tok)
                report.append(prop)
                if self.current.kind == "COMMA":
                    self.advance()
                    continue
                break
            self.expect("SEMI", "';'")

        self.expect("RBRACE", "'}'")
        return ShapeSpec(name, min_lines, max_lines, tuple(constraints), display, tuple(report))

    def parse_index_pair(self, name: str, max_lines: int, tok: _Token) -> tuple[int, int]:
        i = int(self.expect("INT", "line index").value)
        j = int(self.expect("INT", "line index").value)
        for idx in (i, j):
            if not 1 <= idx <= max_lines:
                self.fail(f"shape {name!r}: line index {idx} outside 1..{max_lines}", tok)
        if i == j:
            self.fail(f"shape {name!r}: constraint indices must differ", tok)
        return i, j

    def parse_tol(self, default: float) -> float:
        if self.at_keyword("tol"):
            tok = self.advance()
            tol = self.parse_number("tolerance")
            if tol < 0:
                self.fail("tolerance must be non-negative", tok)
            return tol
        return default

    def parse_constraint(self, name: str, max_lines: int) -> Constraint:
        tok = self.current
        if tok.kind != "IDENT":
            raise DslSyntaxError(f"expected a constraint, found {tok.value!r}", tok.line, tok.column)
        word = tok.value
        self.advance()
        constraint: Constraint
        if word == "closed":
            if self.at_keyword("tol"):
                self.advance()
                tol_tok = self.current
                tol = self.parse_number("gap tolerance")
                if tol < 0:
                    self.fail("tolerance must be non-negative", tol_tok)
                constraint = Closed(gap_tol_px=tol, gap_tol_fraction=0.0)
            else:
                constraint = Closed()
        elif word == "perpendicular":
            i, j = self.parse_index_pair(name, max_lines, tok)
            constraint = Perpendicular(i, j, self.parse_tol(DEFAULT_ANGLE_TOL_DEG))
        elif word == "parallel":
            i, j = self.parse_index_pair(name, max_lines, tok)
            constraint = Parallel(i, j, self.parse_tol(DEFAULT_ANGLE_TOL_DEG))
        elif word == "equal_length":
            i, j = self.parse_index_pair(name, max_lines, tok)
            constraint = EqualLength(i, j, self.parse_tol(DEFAULT_RATIO_TOL))
        elif word == "angle":
            i, j = self.parse_index_pair(name, max_lines, tok)
            degrees = self.parse_number("angle in degrees")
            if not 0 < degrees <= 180:
                self.fail(f"angle must be in (0, 180], got {degrees}", tok)
            constraint = AngleBetween(i, j, degrees, self.parse_tol(DEFAULT_ANGLE_TOL_DEG))
        elif word == "length_ratio":
            i, j = self.parse_index_pair(name, max_lines, tok)
            ratio = self.parse_number("length ratio")
            if ratio <= 0:
                self.fail(f"length ratio must be positive, got {ratio}", tok)
            constraint = LengthRatio(i, j, ratio, self.parse_tol(DEFAULT_RATIO_TOL))
        else:
            raise DslSyntaxError(f"unknown constraint {word!r}", tok.line, tok.column)
        self.expect("SEMI", "';'")
        return constraint


def parse_library(text: str) -> DomainLibrary:
    """Parse shape description text declaring one or more domains."""
    library = _Parser(text).parse_library()
    diagnostics = validate(library)
    if diagnostics:
        raise DslValidationError(diagnostics)
    return library


def parse_domain_file(text: str) -> DomainSpec:
    """Parse shape description text declaring exactly one domain."""
    library = parse_library(text)
    if len(library.domains) != 1:
        raise DslValidationError(
            [f"expected exactly one domain, found {len(library.domains)}"]
        )
    return library.domains[0]


def load_domains_dir(directory) -> DomainLibrary:
    """Build a library from every ``*.shapes`` file of a directory (sorted)."""
    directory = Path(directory)
    files = sorted(directory.glob("*.shapes"))
    if not files:
        raise DslValidationError([f"no *.shapes files in {directory}"])
    domains: list[DomainSpec] = []
    for path in files:
        try:
            domains.extend(parse_library(path.read_text(encoding="utf-8")).domains)
        except (DslSyntaxError, DslValidationError) as exc:
            raise DslValidationError([f"{path.name}: {exc}"]) from exc
    library = DomainLibrary(tuple(domains))
    diagnostics = validate(library)
    if diagnostics:
        raise DslValidationError(diagnostics)
    return library


# ---------------------------------------------------------------------------
# Validation of programmatically built specs
# ---------------------------------------------------------------------------

def _validate_constraint(path: str, shape: ShapeSpec, c: Constraint, out: list[str]) -> None:
    indexed = not isinstance(c, Closed)
    if indexed:
        if c.i == c.j:
            out.append(f"{path}: constraint indices must differ")
        for idx in (c.i, c.j):
            if not 1 <= idx <= shape.max_lines:
                out.append(f"{path}: line index {idx} outside 1..{shape.max_lines}")
    if isinstance(c, Closed):
        if c.gap_tol_px < 0 or c.gap_tol_fraction < 0:
            out.append(f"{path}: closed tolerances must be non-negative")
    elif isinstance(c, (Perpendicular, Parallel)):
        if c.tol_deg < 0:
            out.append(f"{path}: tolerance must be non-negative")
    elif isinstance(c, EqualLength):
        if c.tol_ratio < 0:
            out.append(f"{path}: tolerance must be non-negative")
    elif isinstance(c, AngleBetween):
        if not 0 < c.degrees <= 180:
            out.append(f"{path}: angle must be in (0, 180]")
        if c.tol_deg < 0:
            out.append(f"{path}: tolerance must be non-negative")
    elif isinstance(c, LengthRatio):
        if c.ratio <= 0:
            out.append(f"{path}: length ratio must be positive")
        if c.tol_ratio < 0:
            out.append(f"{path}: tolerance must be non-negative")


def validate(library: DomainLibrary) -> list[str]:
    """Structural diagnostics for a library; empty when all invariants hold."""
    out: list[str] = []
    domain_names: set[str] = set()
    for domain in library.domains:
        dpath = f"domain {domain.name}"
        if domain.name in domain_names:
            out.append(f"{dpath}: duplicate domain name")
        domain_names.add(domain.name)
        if not domain.shapes:
            out.append(f"{dpath}: must declare at least one shape")
        shape_names: set[str] = set()
        for shape in domain.shapes:
            spath = f"{dpath} / shape {shape.name}"
            if shape.name in shape_names:
                out.append(f"{spath}: duplicate shape name")
            shape_names.add(shape.name)
            if not 1 <= shape.min_lines <= shape.max_lines:
                out.append(f"{spath}: invalid line range {shape.min_lines}..{shape.max_lines}")
            for prop in shape.report:
                if prop not in REPORTABLE_PROPERTIES:
                    out.append(f"{spath}: unknown reportable property {prop!r}")
            for c in shape.constraints:
                _validate_constraint(spath, shape, c, out)
    return out


# ---------------------------------------------------------------------------
# Rendering back to source text
# ---------------------------------------------------------------------------

def _fmt_number(value: float) -> str:
    if value == int(value):
        return str(int(value))
    return repr(value)


def _render_constraint(c: Constraint) -> str:
    if isinstance(c, Closed):
        if (c.gap_tol_px, c.gap_tol_fraction) == (DEFAULT_GAP_TOL_PX, DEFAULT_GAP_TOL_FRACTION):
            return "closed;"
        # Only a pixel tolerance is expressible in the grammar.
        return f"closed tol {_fmt_number(c.gap_tol_px)};"
    if isinstance(c, Perpendicular):
        body, tol, default = f"perpendicular {c.i} {c.j}", c.tol_deg, DEFAULT_ANGLE_TOL_DEG
    elif isinstance(c, Parallel):
        body, tol, default = f"parallel {c.i} {c.j}", c.tol_deg, DEFAULT_ANGLE_TOL_DEG
    elif isinstance(c, EqualLength):
        body, tol, default = f"equal_length {c.i} {c.j}", c.tol_ratio, DEFAULT_RATIO_TOL
    elif isinstance(c, AngleBetween):
        body, tol, default = f"angle {c.i} {c.j} {_fmt_number(c.degrees)}", c.tol_deg, DEFAULT_ANGLE_TOL_DEG
    elif isinstance(c, LengthRatio):
        body, tol, default = f"length_ratio {c.i} {c.j} {_fmt_number(c.ratio)}", c.tol_ratio, DEFAULT_RATIO_TOL
    else:
        raise TypeError(f"unknown constraint {c!r}")
    suffix = "" if tol == default else f" tol {_fmt_number(tol)}"
    return f"{body}{suffix};"


def _escape(label: str) -> str:
    return label.replace("\\", "\\\\").replace('"', '\\"')


def render_library(library: DomainLibrary) -> str:
    out: list[str] = []
    for domain in library.domains:
        out.append(f"domain {domain.name} {{")
        for shape in domain.shapes:
            lines_clause = (
                str(shape.min_lines)
                if shape.min_lines == shape.max_lines
                else f"{shape.min_lines}..{shape.max_lines}"
            )
            out.append(f"  shape {shape.name} {{")
            out.append(f"    lines {lines_clause};")
            out.append("    constraints {")
            for c in shape.constraints:
                out.append(f"      {_render_constraint(c)}")
            out.append("    }")
            out.append(f'    display "{_escape(shape.display_label)}";')
            if shape.report:
                out.append(f"    report {', '.join(shape.report)};")
            out.append("  }")
        out.append("}")
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# Bundled domains
# ---------------------------------------------------------------------------

# Flowchart/Rectangle follows the published behavior of the original tool;
# the remaining shapes are practical fixtures for multi-domain search.
BUILTIN_SOURCE = """\
domain Flowchart {
  shape Rectangle {
    lines 4;
    constraints {
      closed;
      perpendicular 1 2;
      perpendicular 2 3;
      perpendicular 3 4;
      perpendicular 4 1;
    }
    display "Rectangle";
    report angles, lengths;
  }
  shape Diamond {
    lines 4;
    constraints {
      closed;
      equal_length 1 2;
      equal_length 2 3;
      equal_length 3 4;
    }
    display "Diamond";
    report lengths;
  }
  shape Parallelogram {
    lines 4;
    constraints {
      closed;
      parallel 1 3;
      parallel 2 4;
    }
    display "Parallelogram";
    report angles, lengths;
  }
}

domain Mathematics {
  shape Triangle {
    lines 3;
    constraints {
      closed;
    }
    display "Triangle";
    report angles, lengths;
  }
  shape Square {
    lines 4;
    constraints {
      closed;
      perpendicular 1 2;
      perpendicular 2 3;
      perpendicular 3 4;
      equal_length 1 2;
      equal_length 2 3;
      equal_length 3 4;
    }
    display "Square";
    report lengths;
  }
  shape Angle {
    lines 2;
    constraints {
    }
    display "Angle";
    report angles;
  }
}
"""


@lru_cache(maxsize=1)
def builtin_library() -> DomainLibrary:
    """The bundled domain library (Flowchart and Mathematics)."""
    return parse_library(BUILTIN_SOURCE)
