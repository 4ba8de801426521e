"""Definition loader for ancilla extension schemes.

Loads YAML/JSON definitions from functions/extensions/definitions (or the
directory named by EQUIPARTITION_EXTENSIONS_DIR).

Invalid definitions raise ValueError with the file named in the message, so
test runs fail fast.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

import yaml

from ...config import get_extensions_dir
from ...errors import InvalidParameter
from .schema import SCHEME_KINDS, ExtensionScheme

DEFAULT_SCHEME = "uniform"


def _require(obj: Dict[str, Any], key: str, *, ctx: str) -> Any:
    if key not in obj:
        raise ValueError(f"Missing required key '{key}' in {ctx}")
    return obj[key]


def _load_one(path: Path) -> Dict[str, Any]:
    try:
        raw = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ValueError(f"Cannot read definition file {path}: {exc}") from None
    if path.suffix.lower() in (".yaml", ".yml"):
        try:
            data = yaml.safe_load(raw) or {}
        except yaml.YAMLError as exc:
            raise ValueError(f"Invalid YAML in {path}: {exc}") from None
        if not isinstance(data, dict):
            raise ValueError(f"Top-level YAML must be a mapping in {path}")
        return data
    if path.suffix.lower() == ".json":
        data = json.loads(raw)
        if not isinstance(data, dict):
            raise ValueError(f"Top-level JSON must be an object in {path}")
        return data
    raise ValueError(f"Unsupported definition file type: {path}")


def _parse_patterns(obj: Any, *, ctx: str) -> Dict[int, Tuple[int, ...]]:
    if obj is None:
        return {}
    if not isinstance(obj, dict):
        raise ValueError(f"patterns must be a mapping of ancilla count to signs in {ctx}")
    out: Dict[int, Tuple[int, ...]] = {}
    for key, signs in obj.items():
        pctx = f"{ctx}.patterns[{key}]"
        try:
            k = int(key)
        except (TypeError, ValueError):
            raise ValueError(f"ancilla count must be an integer in {pctx}") from None
        if not isinstance(signs, list) or len(signs) != 1 << k:
            raise ValueError(f"pattern must be a list of {1 << k} signs in {pctx}")
        if any(s not in (-1, 1) or isinstance(s, bool) for s in signs):
            raise ValueError(f"pattern entries must be -1 or +1 in {pctx}")
        out[k] = tuple(int(s) for s in signs)
    return out


def load_extension_schemes(definitions_dir: Optional[Path] = None) -> List[ExtensionScheme]:
    override = get_extensions_dir()
    base = definitions_dir or (Path(override) if override else Path(__file__).resolve().parent / "definitions")
    if not base.exists():
        return []
    paths = sorted(p for p in base.iterdir() if p.is_file() and p.suffix.lower() in (".yaml", ".yml", ".json"))
    out: List[ExtensionScheme] = []
    seen = set()
    for p in paths:
        data = _load_one(p)
        ctx = f"definition({p.name})"
        scheme_id = str(_require(data, "id", ctx=ctx)).strip()
        if not scheme_id:
            raise ValueError(f"id cannot be empty in {ctx}")
        if scheme_id in seen:
            raise ValueError(f"duplicate scheme id '{scheme_id}' in {ctx}")
        kind = str(data.get("kind") or "uniform").strip().lower()
        if kind not in SCHEME_KINDS:
            raise ValueError(f"kind must be one of {', '.join(SCHEME_KINDS)} in {ctx}")
        patterns = _parse_patterns(data.get("patterns"), ctx=ctx)
        if kind == "explicit" and not patterns:
            raise ValueError(f"explicit scheme needs patterns in {ctx}")
        seen.add(scheme_id)
        out.append(
            ExtensionScheme(
                id=scheme_id,
                kind=kind,
                description=str(data.get("description") or "").strip(),
                patterns=patterns,
                source_file=p.name,
            )
        )
    return out


def get_extension_scheme(name: str = DEFAULT_SCHEME, definitions_dir: Optional[Path] = None) -> ExtensionScheme:
    for scheme in load_extension_schemes(definitions_dir):
        if scheme.id == name:
            return scheme
    if name == DEFAULT_SCHEME:
        return ExtensionScheme(id=DEFAULT_SCHEME)
    raise InvalidParameter(f"unknown extension scheme '{name}'")
