"""HTTP service: translation plus the correction-contribution loop.

POST /translate runs the rule-based spa->lad engine; POST /contribute
appends a user-corrected translation to an append-only JSON-lines store
(one object per line, fsynced before the id is returned); GET
/contributions/export emits the store as aligned source/corrected line
lists for use as parallel data; GET /health reports loaded rule-data
sizes. Rule data is loaded once at startup and immutable afterwards, so
translation requests are stateless and fully parallel; appends serialize
through a single lock.
"""

from __future__ import annotations

import json
import os
import threading
from dataclasses import asdict, dataclass
from datetime import datetime, timezone
from pathlib import Path
from typing import Optional

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from ladinomt import TranslationEngine, default_engine

DEFAULT_MAX_TEXT_LENGTH = 10_000

SUPPORTED_PAIRS = {("spa", "lad")}


@dataclass(frozen=True)
class ContributionRecord:
    id: int
    source_lang: str
    target_lang: str
    source_text: str
    machine_output: str
    corrected_text: str
    submitted_at: str
    client_note: Optional[str] = None


class StorageError(RuntimeError):
    pass


def escape_line(text: str) -> str:
    """Escape backslashes and line breaks so the text fits on one line."""
    return (
        text.replace("\\", "\\\\")
        .replace("\r", "\\r")
        .replace("\n", "\\n")
    )


def unescape_line(text: str) -> str:
    out = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "\\" and i + 1 < len(text):
            nxt = text[i + 1]
            if nxt == "\\":
                out.append("\\")
                i += 2
                continue
            if nxt == "n":
                out.append("\n")
                i += 2
                continue
            if nxt == "r":
                out.append("\r")
                i += 2
                continue
        out.append(ch)
        i += 1
    return "".join(out)


class ContributionStore:
    """Append-only JSON-lines persistence for contributed corrections.

    Existing bytes are never rewritten; each append is flushed and fsynced
    before its id is handed back, and a lock serializes writers.
    """

    def __init__(self, path: Path):
        self.path = Path(path)
        self._lock = threading.Lock()
        self.path.parent.mkdir(parents=True, exist_ok=True)
        self._next_id = self._count_records() + 1

    def _count_records(self) -> int:
        if not self.path.exists():
            return 0
        with open(self.path, "r", encoding="utf-8") as fh:
            return sum(1 for line in fh if line.strip())

    def append(
        self,
        source_lang: str,
        target_lang: str,
        source_text: str,
        machine_output: str,
        corrected_text: str,
        client_note: Optional[str] = None,
    ) -> ContributionRecord:
        with self._lock:
            record = ContributionRecord(
                id=self._next_id,
                source_lang=source_lang,
                target_lang=target_lang,
                source_text=source_text,
                machine_output=machine_output,
                corrected_text=corrected_text,
                submitted_at=datetime.now(timezone.utc).isoformat(),
                client_note=client_note,
            )
            line = json.dumps(asdict(record), ensure_ascii=False)
            try:
                with open(self.path, "a", encoding="utf-8") as fh:
                    fh.write(line + "\n")
                    fh.flush()
                    os.fsync(fh.fileno())
            except OSError as exc:
                raise StorageError(str(exc)) from exc
            self._next_id += 1
            return record

    def records(self) -> list[ContributionRecord]:
        if not self.path.exists():
            return []
        out = []
        with open(self.path, "r", encoding="utf-8") as fh:
            for line in fh:
                line = line.strip()
                if line:
                    out.append(ContributionRecord(**json.loads(line)))
        return out

    def export_pairs(self) -> tuple[list[str], list[str]]:
        """Aligned (source, corrected) line lists, newline-escaped."""
        records = self.records()
        sources = [escape_line(r.source_text) for r in records]
        corrected = [escape_line(r.corrected_text) for r in records]
        return sources, corrected


def create_app(
    engine: Optional[TranslationEngine] = None,
    store: Optional[ContributionStore] = None,
    store_path: Optional[Path] = None,
    max_text_length: int = DEFAULT_MAX_TEXT_LENGTH,
    cors_origin: str = "*",
) -> FastAPI:
    """Build the service; rule data loads eagerly so startup fails loudly."""
    engine = engine or default_engine()
    if store is None:
        store = ContributionStore(store_path or Path("contributions.jsonl"))

    app = FastAPI(title="ladinomt", version="0.1.0")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=[cors_origin] if cors_origin != "*" else ["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )
    app.state.engine = engine
    app.state.store = store

    def error(status: int, message: str) -> JSONResponse:
        return JSONResponse({"error": message}, status_code=status)

    @app.post("/translate")
    async def translate_endpoint(request: Request):
        try:
            body = await request.json()
        except Exception:
            return error(400, "request body must be valid JSON")
        if not isinstance(body, dict) or not isinstance(body.get("text"), str):
            return error(400, "missing string field: text")
        src = body.get("src", "spa")
        tgt = body.get("tgt", "lad")
        if (src, tgt) not in SUPPORTED_PAIRS:
            return error(400, f"unsupported language pair: {src}-{tgt}")
        text = body["text"]
        if len(text) > max_text_length:
            return error(413, f"text exceeds {max_text_length} characters")
        result = engine.translate(text)
        return {
            "output": result.output,
            "trace": [
                {
                    "source": entry.source,
                    "mechanism": entry.mechanism.value,
                    "output": entry.output,
                }
                for entry in result.token_trace
            ],
        }

    @app.post("/contribute")
    async def contribute_endpoint(request: Request):
        try:
            body = await request.json()
        except Exception:
            return error(400, "request body must be valid JSON")
        if not isinstance(body, dict):
            return error(400, "request body must be a JSON object")
        required = ["source_lang", "target_lang", "source_text", "corrected_text"]
        for fieldname in required:
            value = body.get(fieldname)
            if not isinstance(value, str) or not value.strip():
                return error(400, f"missing or empty field: {fieldname}")
        machine_output = body.get("machine_output", "")
        if not isinstance(machine_output, str):
            return error(400, "machine_output must be a string")
        client_note = body.get("client_note")
        if client_note is not None and not isinstance(client_note, str):
            return error(400, "client_note must be a string")
        if body["target_lang"] != "lad":
            return error(400, "target_lang must be 'lad'")
        try:
            record = store.append(
                source_lang=body["source_lang"],
                target_lang=body["target_lang"],
                source_text=body["source_text"],
                machine_output=machine_output,
                corrected_text=body["corrected_text"],
                client_note=client_note,
            )
        except StorageError as exc:
            return error(507, f"storage failure: {exc}")
        return {"id": record.id}

    @app.get("/contributions/export")
    async def export_endpoint():
        sources, corrected = store.export_pairs()
        return {
            "source_lines": sources,
            "corrected_lines": corrected,
            "count": len(sources),
        }

    @app.get("/health")
    async def health_endpoint():
        return {
            "status": "ok",
            "lexicon_entries": engine.lexicon.entry_count,
            "phrase_rules": len(engine.phrases),
        }

    return app
