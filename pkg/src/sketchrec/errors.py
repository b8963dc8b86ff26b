"""Exception types shared across the package."""


class SketchError(Exception):
    """Base class for all sketchrec errors."""


class SketchFileError(SketchError):
    """Malformed or invalid sketch document."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"line {line}, column {column}: {message}"
        super().__init__(message)


class TableFormatError(SketchError):
    """Table file does not match the expected CSV schema."""


class TableConsistencyError(SketchError):
    """Per-stroke table inputs disagree (e.g. category count vs point count)."""


class SegmentationError(SketchError):
    """Base class for stroke segmentation failures."""


class ZeroDisplacementError(SegmentationError):
    """Two identical consecutive points have no direction category."""


class StrokeTooShortError(SegmentationError):
    """Stroke has fewer than two distinct points."""


class InvalidSplitsError(SegmentationError):
    """Split indices are out of range or not strictly increasing."""


class DegenerateSegmentError(SegmentationError):
    """A split range collapses to a zero-length chord."""


class ConstraintIndexError(SketchError):
    """A constraint references a line index beyond the segment count."""


class DslError(SketchError):
    """Base class for shape description language errors."""


class DslSyntaxError(DslError):
    """Syntax error in a shape description, with source position."""

    def __init__(self, message: str, line: int, column: int):
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")


class DslValidationError(DslError):
    """Shape description violates a structural invariant."""

    def __init__(self, diagnostics):
        self.diagnostics = list(diagnostics)
        super().__init__("; ".join(self.diagnostics))
