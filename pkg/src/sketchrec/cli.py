"""Command-line interface.

Subcommands: segment, recognize, domains list, export-tables, serve.
Exit codes: 0 success, 1 processing error, 2 missing/unreadable input file.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import tables
from .dsl import DomainLibrary, builtin_library, load_domains_dir
from .errors import SegmentationError, SketchError
from .model import SketchDocument, load_document
from .segmentation import MergeConfig, SmoothingConfig, process_stroke
from .service import build_recognize_response, create_server, to_json


def _load_library(args) -> DomainLibrary:
    if getattr(args, "domains", None):
        return load_domains_dir(args.domains)
    return builtin_library()


def _load_sketch(path: str) -> SketchDocument:
    return load_document(path)


def _segment_document(document: SketchDocument, smoothing: SmoothingConfig, merge: MergeConfig):
    """Per-stroke pipeline results; strokes that cannot be segmented map to None."""
    results = {}
    for stroke in document.strokes:
        try:
            results[stroke.id] = process_stroke(stroke, smoothing, merge)
        except SegmentationError as exc:
            results[stroke.id] = None
            print(f"stroke {stroke.id}: skipped ({exc})")
    return results


def cmd_segment(args) -> int:
    document = _load_sketch(args.file)
    smoothing = SmoothingConfig(block_size=args.block_size)
    merge = MergeConfig(max_deviation=args.max_deviation)
    results = _segment_document(document, smoothing, merge)

    segmented = {sid: r for sid, r in results.items() if r is not None}
    tables.export_tables(
        document,
        segments={sid: list(r.raw_segments) for sid, r in segmented.items()},
        categories={sid: list(r.categories) for sid, r in segmented.items()},
        smoothed={sid: list(r.smoothed) for sid, r in segmented.items()},
        out_dir=args.out_dir,
    )
    out = Path(args.out_dir)
    for sid, r in segmented.items():
        tables.write_segment_table(out / f"sketch{sid}segmentm.csv", r.segments)
        print(f"stroke {sid}: {len(r.raw_segments)} segments, {len(r.segments)} after merge")
    return 0


def cmd_export_tables(args) -> int:
    document = _load_sketch(args.file)
    results = _segment_document(document, SmoothingConfig(), MergeConfig())
    segmented = {sid: r for sid, r in results.items() if r is not None}
    written = tables.export_tables(
        document,
        segments={sid: list(r.raw_segments) for sid, r in segmented.items()},
        categories={sid: list(r.categories) for sid, r in segmented.items()},
        smoothed={sid: list(r.smoothed) for sid, r in segmented.items()},
        out_dir=args.out_dir,
    )
    print(f"wrote {len(written)} table files to {args.out_dir}")
    return 0


def _format_properties(properties: dict) -> str:
    parts = []
    for name, values in properties.items():
        rendered = ",".join(f"{v:.1f}" for v in values)
        parts.append(f"{name}=[{rendered}]")
    return " ".join(parts)


def cmd_recognize(args) -> int:
    document = _load_sketch(args.file)
    library = _load_library(args)
    response = build_recognize_response(document, library)
    if args.json:
        print(to_json(response))
        return 0
    for record in response["results"]:
        if record["shape"] == "Undefined":
            print(f"stroke {record['stroke_id']}: Undefined")
        else:
            line = f"stroke {record['stroke_id']}: {record['domain']}/{record['shape']}"
            props = _format_properties(record["properties"])
            print(f"{line} {props}" if props else line)
    return 0


def cmd_domains_list(args) -> int:
    library = _load_library(args)
    for domain in library.domains:
        print(f"{domain.name}: {', '.join(s.name for s in domain.shapes)}")
    return 0


def cmd_serve(args) -> int:
    library = _load_library(args)
    try:
        server = create_server(library, port=args.port, host=args.host, static_dir=args.static)
    except OSError as exc:
        print(f"error: cannot bind {args.host}:{args.port}: {exc}", file=sys.stderr)
        return 1
    print(f"serving on http://{args.host}:{server.server_address[1]}")
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sketchrec", description="Sketch segmentation and recognition")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("segment", help="segment a sketch file and export its tables")
    p.add_argument("file")
    p.add_argument("-o", "--out-dir", default="tables")
    p.add_argument("--block-size", type=int, default=5)
    p.add_argument("--max-deviation", type=float, default=5.0)
    p.set_defaults(func=cmd_segment)

    p = sub.add_parser("recognize", help="recognize every stroke of a sketch file")
    p.add_argument("file")
    p.add_argument("--domains", help="directory of *.shapes files (default: builtin library)")
    p.add_argument("--json", action="store_true", help="emit the full recognize response as JSON")
    p.set_defaults(func=cmd_recognize)

    p = sub.add_parser("domains", help="inspect shape domains")
    domains_sub = p.add_subparsers(dest="domains_command", required=True)
    p_list = domains_sub.add_parser("list", help="list domains and their shapes")
    p_list.add_argument("--domains", help="directory of *.shapes files")
    p_list.set_defaults(func=cmd_domains_list)

    p = sub.add_parser("export-tables", help="write the four per-stroke tables")
    p.add_argument("file")
    p.add_argument("-o", "--out-dir", required=True)
    p.set_defaults(func=cmd_export_tables)

    p = sub.add_parser("serve", help="run the HTTP recognition service")
    p.add_argument("--port", type=int, default=8765)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--domains", help="directory of *.shapes files")
    p.add_argument("--static", help="directory of static UI assets to serve")
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SketchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
