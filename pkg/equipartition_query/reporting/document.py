"""The command output document and its JSON form."""

from __future__ import annotations

import json
from typing import Any, Dict, Literal

import numpy as np
from pydantic import BaseModel, Field

from .format import canonical_float

OutputFormat = Literal["text", "csv", "json"]


def to_jsonable(value: Any) -> Any:
    """Plain JSON values with floats canonicalized and complex numbers as {re, im}."""
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        return canonical_float(float(value))
    if isinstance(value, (complex, np.complexfloating)):
        return {"re": canonical_float(value.real), "im": canonical_float(value.imag)}
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, np.ndarray)):
        return [to_jsonable(v) for v in value]
    if isinstance(value, (set, frozenset)):
        return [to_jsonable(v) for v in sorted(value)]
    if value is None or isinstance(value, str):
        return value
    return str(value)


class OutputDocument(BaseModel):
    command: str
    params: Dict[str, Any] = Field(default_factory=dict)
    result: Dict[str, Any] = Field(default_factory=dict)
    format: OutputFormat = "json"

    @classmethod
    def build(cls, command: str, params: Dict[str, Any], result: Dict[str, Any], format: OutputFormat) -> "OutputDocument":
        return cls(command=command, params=to_jsonable(params), result=to_jsonable(result), format=format)

    def to_json(self) -> str:
        # command, params, result in that order; the format tag is not part of the payload.
        payload = self.model_dump(mode="json", exclude={"format"})
        return json.dumps(payload, indent=2, ensure_ascii=False) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "OutputDocument":
        return cls.model_validate({**json.loads(text), "format": "json"})
