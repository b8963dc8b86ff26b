"""HTTP JSON service and the wire-format response builder.

The recognize response is built by the same function for the CLI's --json
mode and for POST /recognize, so both produce byte-identical output. The
server is stateless: every response depends only on the request body and
the domain library loaded at startup.
"""

from __future__ import annotations

import json
import logging
import mimetypes
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from pathlib import Path

from .beautifier import beautify
from .dsl import DomainLibrary
from .errors import SegmentationError, SketchFileError
from .model import SketchDocument, parse_document
from .recognizer import classify_segments
from .segmentation import MergeConfig, SmoothingConfig, process_stroke

logger = logging.getLogger(__name__)

MAX_BODY_BYTES = 1 << 20  # 1 MiB
REQUEST_TIMEOUT_S = 10.0
UNDEFINED = "Undefined"


def build_recognize_response(
    document: SketchDocument,
    library: DomainLibrary,
    smoothing: SmoothingConfig = SmoothingConfig(),
    merge: MergeConfig = MergeConfig(),
) -> dict:
    """Per-stroke recognition records; unmatched strokes stay Undefined."""
    results = []
    for stroke in document.strokes:
        record: dict = {
            "stroke_id": stroke.id,
            "domain": UNDEFINED,
            "shape": UNDEFINED,
            "properties": {},
            "segments": {"raw": [], "merged": []},
        }
        results.append(record)
        try:
            pipe = process_stroke(stroke, smoothing, merge)
        except SegmentationError:
            continue
        record["segments"]["raw"] = [
            [s.start.x, s.start.y, s.end.x, s.end.y] for s in pipe.raw_segments
        ]
        record["segments"]["merged"] = [
            [s.start.x, s.start.y, s.end.x, s.end.y] for s in pipe.segments
        ]
        chosen, _ = classify_segments(pipe.segments, library)
        if chosen is None:
            continue
        spec = library.find_shape(chosen.domain_name, chosen.shape_name)
        shape = beautify(chosen, pipe.segments, spec)
        record["domain"] = chosen.domain_name
        record["shape"] = chosen.shape_name
        record["properties"] = {name: list(values) for name, values in shape.properties.items()}
        record["beautified"] = {
            "vertices": [[x, y] for x, y in shape.vertices],
            "closed": shape.closed,
        }
    return {"results": results}


def domains_payload(library: DomainLibrary) -> dict:
    return {
        "domains": [
            {"name": d.name, "shapes": [s.name for s in d.shapes]} for d in library.domains
        ]
    }


def to_json(payload: dict) -> str:
    return json.dumps(payload, sort_keys=True, separators=(",", ":"))


class SketchServer(ThreadingHTTPServer):
    daemon_threads = True

    def __init__(
        self,
        address,
        library: DomainLibrary,
        static_dir=None,
        smoothing: SmoothingConfig = SmoothingConfig(),
        merge: MergeConfig = MergeConfig(),
    ):
        self.library = library
        self.static_dir = Path(static_dir).resolve() if static_dir else None
        self.smoothing = smoothing
        self.merge = merge
        super().__init__(address, SketchRequestHandler)


class SketchRequestHandler(BaseHTTPRequestHandler):
    protocol_version = "HTTP/1.1"
    timeout = REQUEST_TIMEOUT_S
    server: SketchServer

    def log_message(self, format, *args):  # noqa: A002 - stdlib signature
        logger.debug("%s - %s", self.address_string(), format % args)

    def _send(self, status: int, body: bytes, content_type: str) -> None:
        self.send_response(status)
        self.send_header("Content-Type", content_type)
        self.send_header("Content-Length", str(len(body)))
        self.send_header("Access-Control-Allow-Origin", "*")
        self.end_headers()
        self.wfile.write(body)

    def _send_json(self, status: int, payload: dict) -> None:
        body = (to_json(payload) + "\n").encode("utf-8")
        self._send(status, body, "application/json; charset=utf-8")

    def do_GET(self):
        path = self.path.split("?", 1)[0]
        if path == "/healthz":
            self._send_json(200, {"status": "ok"})
        elif path == "/domains":
            self._send_json(200, domains_payload(self.server.library))
        elif self.server.static_dir is not None:
            self._send_static(path)
        else:
            self._send_json(404, {"error": f"no such resource: {path}"})

    def _send_static(self, path: str) -> None:
        root = self.server.static_dir
        rel = path.lstrip("/") or "index.html"
        target = (root / rel).resolve()
        if root not in target.parents and target != root:
            self._send_json(404, {"error": "not found"})
            return
        if target.is_dir():
            target = target / "index.html"
        if not target.is_file():
            self._send_json(404, {"error": f"no such resource: {path}"})
            return
        content_type = mimetypes.guess_type(target.name)[0] or "application/octet-stream"
        self._send(200, target.read_bytes(), content_type)

    def do_POST(self):
        path = self.path.split("?", 1)[0]
        if path != "/recognize":
            self._send_json(404, {"error": f"no such resource: {path}"})
            return
        try:
            length = int(self.headers.get("Content-Length", "0"))
        except ValueError:
            self._send_json(400, {"error": "invalid Content-Length"})
            return
        if length > MAX_BODY_BYTES:
            self.close_connection = True
            # Drain a bounded amount so naive clients can read the response.
            remaining = min(length, 8 * MAX_BODY_BYTES)
            while remaining > 0:
                chunk = self.rfile.read(min(65536, remaining))
                if not chunk:
                    break
                remaining -= len(chunk)
            self._send_json(413, {"error": f"request body exceeds {MAX_BODY_BYTES} bytes"})
            return
        body = self.rfile.read(length)
        try:
            document = parse_document(body.decode("utf-8"))
        except UnicodeDecodeError:
            self._send_json(400, {"error": "request body is not valid UTF-8"})
            return
        except SketchFileError as exc:
            self._send_json(400, {"error": str(exc)})
            return
        response = build_recognize_response(
            document, self.server.library, self.server.smoothing, self.server.merge
        )
        self._send_json(200, response)


def create_server(
    library: DomainLibrary,
    port: int = 8765,
    host: str = "127.0.0.1",
    static_dir=None,
    smoothing: SmoothingConfig = SmoothingConfig(),
    merge: MergeConfig = MergeConfig(),
) -> SketchServer:
    """Bind the service; raises OSError when the port is taken."""
    return SketchServer((host, port), library, static_dir, smoothing, merge)


def serve(
    library: DomainLibrary,
    port: int = 8765,
    host: str = "127.0.0.1",
    static_dir=None,
) -> None:
    """Run the service until interrupted."""
    server = create_server(library, port, host, static_dir)
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
