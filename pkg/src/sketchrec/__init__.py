"""Sketch recognition by direction-based segmentation and domain classification.

Strokes captured as integer pixel sequences are cut into straight segments
at direction change-points, matched against declaratively described shape
domains, and re-drawn cleanly. See README.md for the full tour.
"""

from .beautifier import BeautifiedShape, beautify
from .dsl import (
    AngleBetween,
    Closed,
    Constraint,
    DomainLibrary,
    DomainSpec,
    EqualLength,
    LengthRatio,
    Parallel,
    Perpendicular,
    ShapeSpec,
    builtin_library,
    load_domains_dir,
    parse_domain_file,
    parse_library,
    render_library,
    validate,
)
from .errors import (
    ConstraintIndexError,
    DegenerateSegmentError,
    DslError,
    DslSyntaxError,
    DslValidationError,
    InvalidSplitsError,
    SegmentationError,
    SketchError,
    SketchFileError,
    StrokeTooShortError,
    TableConsistencyError,
    TableFormatError,
    ZeroDisplacementError,
)
from .model import (
    Point,
    SketchDocument,
    Stroke,
    dedup_points,
    document_to_dict,
    dump_document,
    load_document,
    parse_document,
)
from .recognizer import (
    FeatureVector,
    Interpretation,
    RecognitionResult,
    classify_segments,
    eval_constraint,
    extract_features,
    match_shape,
    recognize,
)
from .segmentation import (
    COMPILED_KERNELS,
    MergeConfig,
    Segment,
    SmoothingConfig,
    StrokePipelineResult,
    categorize,
    direction_category,
    extract_segments,
    merge_collinear,
    process_stroke,
    segment_stroke,
    smooth,
    split_points,
)
from .service import build_recognize_response, create_server, serve, to_json
from .tables import export_tables, import_tables

__version__ = "0.1.0"
