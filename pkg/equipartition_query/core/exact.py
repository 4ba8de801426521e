"""Exact rank and span orthogonality for integer sign-vector families.

No floating point: rows are kept as Python integers in a fraction-free
reduced row-echelon basis (every pivot column is zero in all other rows),
each row divided by the gcd of its entries to keep numbers small.
"""

from __future__ import annotations

import logging
from functools import reduce
from math import gcd
from typing import List, Optional, Sequence, Tuple

from ..errors import DimensionMismatch
from .types import SignVector

_LOGGER = logging.getLogger(__name__)


def _common_length(vectors: Sequence[SignVector], *, ctx: str) -> Optional[int]:
    lengths = {len(v) for v in vectors}
    if len(lengths) > 1:
        raise DimensionMismatch(f"mixed vector lengths {sorted(lengths)} in {ctx}")
    return next(iter(lengths)) if lengths else None


def _primitive(row: List[int]) -> List[int]:
    g = reduce(gcd, row, 0)
    if g > 1:
        return [x // g for x in row]
    return row


class _EchelonBasis:
    """Incremental reduced row-echelon form over the integers."""

    def __init__(self, length: int):
        self.length = length
        self.rows: List[Tuple[int, List[int]]] = []  # (pivot column, row)

    @property
    def rank(self) -> int:
        return len(self.rows)

    @property
    def full(self) -> bool:
        return self.rank == self.length

    def insert(self, vector: Sequence[int]) -> bool:
        """Add ``vector``; return True if it enlarged the span."""
        row = list(vector)
        for pivot, basis_row in self.rows:
            c = row[pivot]
            if c:
                p = basis_row[pivot]
                row = [p * x - c * y for x, y in zip(row, basis_row)]
        pivot = next((k for k, x in enumerate(row) if x), None)
        if pivot is None:
            return False
        row = _primitive(row)
        p = row[pivot]
        for idx, (bp, basis_row) in enumerate(self.rows):
            c = basis_row[pivot]
            if c:
                self.rows[idx] = (bp, _primitive([p * x - c * y for x, y in zip(basis_row, row)]))
        self.rows.append((pivot, row))
        return True


def independent_subset(vectors: Sequence[SignVector]) -> List[int]:
    """Indices of the members forming an exact basis of the family's span.

    Members are taken first-come; scanning stops once the span is the whole
    space.
    """
    length = _common_length(vectors, ctx="family")
    if length is None:
        return []
    basis = _EchelonBasis(length)
    picked: List[int] = []
    for idx, v in enumerate(vectors):
        if basis.insert(v.entries):
            picked.append(idx)
            if basis.full:
                break
    _LOGGER.debug("exact rank %d over %d vectors of length %d", len(picked), len(vectors), length)
    return picked


def exact_rank(vectors: Sequence[SignVector]) -> int:
    """Rank over the rationals; the empty family has rank 0."""
    return len(independent_subset(vectors))


def orthogonality_witness(
    a: Sequence[SignVector], b: Sequence[SignVector]
) -> Optional[Tuple[int, int]]:
    """Member indices (i, j) with a[i]·b[j] != 0, or None if the spans are orthogonal.

    Orthogonality of the spans is equivalent to orthogonality of any two
    bases of them, so only basis members are compared.
    """
    la = _common_length(a, ctx="first family")
    lb = _common_length(b, ctx="second family")
    if la is not None and lb is not None and la != lb:
        raise DimensionMismatch(f"families of vector length {la} and {lb}")
    if la is None or lb is None:
        return None
    basis_a = independent_subset(a)
    basis_b = independent_subset(b)
    for i in basis_a:
        for j in basis_b:
            if a[i].dot(b[j]) != 0:
                return (i, j)
    return None


def spans_orthogonal(a: Sequence[SignVector], b: Sequence[SignVector]) -> bool:
    """True iff every vector of span(a) is orthogonal to every vector of span(b)."""
    return orthogonality_witness(a, b) is None
