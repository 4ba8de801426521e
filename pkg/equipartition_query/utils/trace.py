"""Append-only JSONL trace of analysis runs.

Normal logging answers "what went wrong"; the trace records what every
command computed (parameters, ranks, verdicts, circuit outcomes) as one JSON
object per line, for machines and for diffing runs.

Events carry UTC timestamps, so trace files are never part of the
byte-deterministic command output.
"""

from __future__ import annotations

import json
import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Dict, Iterator, Optional


def _utc_iso() -> str:
    return datetime.now(timezone.utc).isoformat()


def _coerce_level(level: Optional[str]) -> str:
    lvl = (level or "pipeline").strip().lower()
    if lvl not in {"pipeline", "verbose", "debug"}:
        return "pipeline"
    return lvl


@dataclass
class TraceLogger:
    """
    JSONL trace writer.

    Levels:
      - pipeline: one record per command phase (default)
      - verbose: adds per-class rank and witness details
      - debug: adds span timings
    """

    path: Optional[Path]
    enabled: bool = True
    level: str = "pipeline"
    _initialized: bool = field(default=False, init=False, repr=False)
    _span_stack: list = field(default_factory=list, init=False, repr=False)

    @property
    def is_verbose(self) -> bool:
        return self.level in {"verbose", "debug"}

    @property
    def is_debug(self) -> bool:
        return self.level == "debug"

    def _write(self, obj: Dict[str, Any]) -> None:
        if not self.enabled or self.path is None:
            return
        if not self._initialized:
            self.path.parent.mkdir(parents=True, exist_ok=True)
            self._initialized = True
        with self.path.open("a", encoding="utf-8") as f:
            f.write(json.dumps(obj, ensure_ascii=False, default=str) + "\n")

    def log(self, phase: str, payload: Dict[str, Any]) -> None:
        self._write({"timestamp": _utc_iso(), "phase": phase, "payload": payload, "span": list(self._span_stack)})

    def event(self, name: str, *, message: Optional[str] = None, data: Optional[Dict[str, Any]] = None) -> None:
        self._write(
            {
                "timestamp": _utc_iso(),
                "kind": "event",
                "name": name,
                "message": message,
                "data": data or {},
                "span": list(self._span_stack),
            }
        )

    @contextmanager
    def span(self, name: str, *, data: Optional[Dict[str, Any]] = None) -> Iterator["TraceLogger"]:
        """Nest events under ``name``; at debug level also record the elapsed time."""
        self._span_stack.append(name)
        start = time.perf_counter()
        try:
            yield self
        finally:
            elapsed_ms = (time.perf_counter() - start) * 1000.0
            if self.is_debug:
                self.event("span_end", data={**(data or {}), "elapsed_ms": round(elapsed_ms, 3)})
            self._span_stack.pop()


def build_trace_logger(path: Optional[Path | str], *, enabled: bool = True, level: Optional[str] = None) -> TraceLogger:
    """Tracer writing to ``path``; a missing path yields a disabled tracer."""
    p = Path(path) if path else None
    return TraceLogger(path=p, enabled=bool(enabled and p is not None), level=_coerce_level(level))


def read_trace(path: Path | str) -> list[Dict[str, Any]]:
    """Load every record of a trace file."""
    out: list[Dict[str, Any]] = []
    with Path(path).open("r", encoding="utf-8") as f:
        for line in f:
            line = line.strip()
            if line:
                out.append(json.loads(line))
    return out
