"""HTTP JSON service over a loaded index.

Stdlib http.server is enough here: state is immutable after startup, every
request handler only reads it, and a threading server gives concurrent
searches without extra dependencies.
"""

import json
import mimetypes
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from pathlib import Path

from .config import AppConfig
from .corpus import CorpusIndex
from .errors import DocumentNotFoundError, RelTreeError
from .pipeline import Lexicons, run_search
from .tree import serialize_tree

MAX_BODY_BYTES = 1 << 20


class SearchServer(ThreadingHTTPServer):
    """Serves search, document lookup, health, and (optionally) static UI files."""

    daemon_threads = True
    # The socketserver default backlog of 5 drops connections under a burst
    # of concurrent clients; searches are read-only so accepting more is safe.
    request_queue_size = 128

    def __init__(self, address: tuple[str, int], config: AppConfig,
                 index: CorpusIndex, lexicons: Lexicons,
                 ui_dir: Path | None = None):
        self.config = config
        self.index = index
        self.lexicons = lexicons
        self.ui_dir = ui_dir.resolve() if ui_dir is not None else None
        super().__init__(address, _Handler)


class _Handler(BaseHTTPRequestHandler):
    protocol_version = "HTTP/1.1"
    server: SearchServer

    # Route dispatch ------------------------------------------------------

    def do_POST(self) -> None:
        if self.path.split("?", 1)[0] == "/search":
            self._handle_search()
        else:
            self._send_json(404, {"error": "not found"})

    def do_GET(self) -> None:
        path = self.path.split("?", 1)[0]
        if path == "/health":
            self._send_json(200, {"status": "ok", "docs": len(self.server.index)})
        elif path.startswith("/documents/"):
            self._handle_document(path[len("/documents/"):])
        elif self.server.ui_dir is not None:
            self._handle_static(path)
        else:
            self._send_json(404, {"error": "not found"})

    def do_OPTIONS(self) -> None:
        self.send_response(204)
        self._send_cors_headers()
        self.send_header("Content-Length", "0")
        self.end_headers()

    # Handlers ------------------------------------------------------------

    def _handle_search(self) -> None:
        try:
            length = int(self.headers.get("Content-Length", "0"))
        except ValueError:
            self._send_json(400, {"error": "invalid Content-Length header"})
            return
        if length > MAX_BODY_BYTES:
            self._send_json(400, {"error": "request body too large"})
            return
        body = self.rfile.read(length) if length > 0 else b""
        try:
            payload = json.loads(body.decode("utf-8"))
        except (UnicodeDecodeError, json.JSONDecodeError) as exc:
            self._send_json(400, {"error": f"request body is not valid JSON: {exc}"})
            return
        if not isinstance(payload, dict) or not isinstance(payload.get("query"), str):
            self._send_json(400, {"error": "body must be a JSON object with a string 'query'"})
            return
        max_results = payload.get("max_results")
        if max_results is not None:
            if isinstance(max_results, bool) or not isinstance(max_results, int) or max_results < 1:
                self._send_json(400, {"error": "'max_results' must be a positive integer"})
                return
        try:
            tree = run_search(self.server.config, self.server.index,
                              self.server.lexicons, payload["query"], max_results)
        except RelTreeError as exc:
            self._send_json(400, {"error": str(exc)})
            return
        self._send_body(200, serialize_tree(tree).encode("utf-8"),
                        "application/json; charset=utf-8")

    def _handle_document(self, doc_id: str) -> None:
        try:
            doc = self.server.index.get_document(doc_id)
        except DocumentNotFoundError as exc:
            self._send_json(404, {"error": str(exc)})
            return
        self._send_json(200, {
            "id": doc.id,
            "title": doc.title,
            "abstract": doc.abstract,
            "source": doc.source,
        })

    def _handle_static(self, path: str) -> None:
        assert self.server.ui_dir is not None
        relative = path.lstrip("/") or "index.html"
        target = (self.server.ui_dir / relative).resolve()
        if not target.is_relative_to(self.server.ui_dir):
            self._send_json(404, {"error": "not found"})
            return
        if target.is_dir():
            target = target / "index.html"
        if not target.is_file():
            self._send_json(404, {"error": "not found"})
            return
        content_type = mimetypes.guess_type(str(target))[0] or "application/octet-stream"
        if content_type.startswith("text/") or content_type == "application/javascript":
            content_type += "; charset=utf-8"
        self._send_body(200, target.read_bytes(), content_type)

    # Response helpers ----------------------------------------------------

    def _send_cors_headers(self) -> None:
        self.send_header("Access-Control-Allow-Origin", "*")
        self.send_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS")
        self.send_header("Access-Control-Allow-Headers", "Content-Type")

    def _send_body(self, status: int, body: bytes, content_type: str) -> None:
        self.send_response(status)
        self.send_header("Content-Type", content_type)
        self.send_header("Content-Length", str(len(body)))
        self._send_cors_headers()
        self.end_headers()
        self.wfile.write(body)

    def _send_json(self, status: int, payload: dict) -> None:
        body = json.dumps(payload, ensure_ascii=False, separators=(",", ":")).encode("utf-8")
        self._send_body(status, body, "application/json; charset=utf-8")

    def log_message(self, format: str, *args) -> None:
        # Request logging stays off; the CLI announces the listening port once.
        pass


def make_server(config: AppConfig, index: CorpusIndex, lexicons: Lexicons,
                host: str = "127.0.0.1", port: int | None = None,
                ui_dir: Path | None = None) -> SearchServer:
    """Bind a server; port=None takes the configured port, 0 binds ephemeral."""
    chosen = config.port if port is None else port
    return SearchServer((host, chosen), config, index, lexicons, ui_dir)


def serve(config: AppConfig, index: CorpusIndex, lexicons: Lexicons,
          host: str = "127.0.0.1", port: int | None = None,
          ui_dir: Path | None = None) -> None:
    """Run until interrupted."""
    with make_server(config, index, lexicons, host, port, ui_dir) as server:
        try:
            server.serve_forever()
        except KeyboardInterrupt:
            pass
