"""Ancilla extension scheme schema.

A scheme fixes, for every ancilla count k, one sign pattern of length 2^k
that is tensored onto every function's sign signature. The pattern never
depends on the function, which keeps the extension uniform and non-adaptive.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Tuple

from ...errors import InvalidParameter
from ...core.types import SignVector

SCHEME_KINDS = ("uniform", "alternating", "explicit")


@dataclass(frozen=True)
class ExtensionScheme:
    id: str
    kind: str = "uniform"  # uniform | alternating | explicit
    description: str = ""
    patterns: Dict[int, Tuple[int, ...]] = field(default_factory=dict)  # explicit only
    source_file: str = ""

    def pattern(self, k: int) -> SignVector:
        if k < 0:
            raise InvalidParameter(f"ancilla count must be >= 0, got {k}")
        if k == 0:
            return SignVector((1,))
        size = 1 << k
        if self.kind == "uniform":
            return SignVector((1,) * size)
        if self.kind == "alternating":
            return SignVector(tuple(1 if i % 2 == 0 else -1 for i in range(size)))
        if k not in self.patterns:
            raise InvalidParameter(f"scheme '{self.id}' defines no pattern for {k} ancillas")
        return SignVector(self.patterns[k])

    def extend(self, vector: SignVector, k: int) -> SignVector:
        return vector.tensor(self.pattern(k))
