"""Can one projective measurement separate the parity classes?

A one-query measurement that tells two classes of sign signatures apart
exists iff their spans are orthogonal. Ranks and the verdict are computed
with exact integer arithmetic.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence, Tuple

from ..config import get_max_ancilla_bits, get_max_ancillas
from ..errors import DimensionMismatch, EquipartitionError, InvalidParameter, require_range
from ..core.exact import exact_rank, orthogonality_witness, spans_orthogonal
from ..core.types import SignVector
from ..observables.partition import EquiPartition
from ..utils.trace import TraceLogger
from .boolean import enumerate_functions, functional_parity
from .extensions import DEFAULT_SCHEME, get_extension_scheme

_LOGGER = logging.getLogger(__name__)


def parity_classes(n: int) -> EquiPartition:
    """Canonical indices of all n-bit functions, split by functional parity."""
    universe = enumerate_functions(n)
    classes: Tuple[List[int], List[int]] = ([], [])
    for f in universe:
        classes[functional_parity(f)].append(f.canonical_index)
    return EquiPartition(
        classes=(tuple(classes[0]), tuple(classes[1])),
        class_labels=(0, 1),
        universe=frozenset(range(len(universe))),
    )


@dataclass(frozen=True)
class SpanWitness:
    """Members of the two classes whose inner product is nonzero."""

    index_a: int
    vector_a: SignVector
    index_b: int
    vector_b: SignVector
    inner_product: int

    def to_dict(self) -> Dict[str, Any]:
        return {
            "class_0_member": self.index_a,
            "class_0_vector": list(self.vector_a.entries),
            "class_1_member": self.index_b,
            "class_1_vector": list(self.vector_b.entries),
            "inner_product": self.inner_product,
        }


@dataclass(frozen=True)
class SpanReport:
    n: int
    class_sizes: Tuple[int, int]
    ranks: Tuple[int, int]
    dimension: int
    orthogonal: bool
    witness: Optional[SpanWitness] = None
    ancillas: int = 0
    scheme: str = DEFAULT_SCHEME

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "ancillas": self.ancillas,
            "scheme": self.scheme,
            "dimension": self.dimension,
            "class_sizes": list(self.class_sizes),
            "ranks": list(self.ranks),
            "orthogonal": self.orthogonal,
            "witness": self.witness.to_dict() if self.witness else None,
        }


def _analyse(
    n: int,
    families: Tuple[Sequence[SignVector], Sequence[SignVector]],
    identifiers: Tuple[Sequence[int], Sequence[int]],
    *,
    ancillas: int,
    scheme: str,
    trace: Optional[TraceLogger],
) -> SpanReport:
    zero, one = families
    ranks = (exact_rank(zero), exact_rank(one))
    hit = orthogonality_witness(zero, one)
    witness = None
    if hit is not None:
        i, j = hit
        witness = SpanWitness(
            index_a=identifiers[0][i],
            vector_a=zero[i],
            index_b=identifiers[1][j],
            vector_b=one[j],
            inner_product=zero[i].dot(one[j]),
        )
    report = SpanReport(
        n=n,
        class_sizes=(len(zero), len(one)),
        ranks=ranks,
        dimension=len(zero[0]) if zero else len(one[0]),
        orthogonal=hit is None,
        witness=witness,
        ancillas=ancillas,
        scheme=scheme,
    )
    _LOGGER.debug("span analysis n=%d k=%d: ranks=%s orthogonal=%s", n, ancillas, ranks, report.orthogonal)
    if trace:
        payload = {"n": n, "ancillas": ancillas, "scheme": scheme, "ranks": list(ranks), "orthogonal": report.orthogonal}
        if trace.is_verbose and witness:
            payload["witness"] = witness.to_dict()
        trace.log("span_analysis", payload)
    return report


def _class_families(n: int) -> Tuple[Tuple[List[SignVector], List[SignVector]], Tuple[List[int], List[int]]]:
    vectors: Tuple[List[SignVector], List[SignVector]] = ([], [])
    ids: Tuple[List[int], List[int]] = ([], [])
    for f in enumerate_functions(n):
        p = functional_parity(f)
        vectors[p].append(f.sign_signature)
        ids[p].append(f.canonical_index)
    return vectors, ids


def span_analysis(n: int, *, trace: Optional[TraceLogger] = None) -> SpanReport:
    """Exact ranks of both parity classes and whether their spans are orthogonal."""
    vectors, ids = _class_families(n)
    if trace:
        with trace.span("span_analysis", data={"n": n}):
            return _analyse(n, vectors, ids, ancillas=0, scheme=DEFAULT_SCHEME, trace=trace)
    return _analyse(n, vectors, ids, ancillas=0, scheme=DEFAULT_SCHEME, trace=None)


def ancilla_extended_span_analysis(
    n: int,
    k: int,
    scheme: str = DEFAULT_SCHEME,
    *,
    trace: Optional[TraceLogger] = None,
) -> SpanReport:
    """Span analysis after tensoring every signature with a fixed 2^k ancilla pattern.

    Exploratory only: a fixed pattern p scales every inner product by |p|^2,
    so no scheme of this shape changes the verdict.
    """
    require_range("n", n, 1, get_max_ancilla_bits())
    if k < 0:
        raise InvalidParameter(f"ancilla count must be >= 0, got {k}")
    require_range("ancillas", k, 0, get_max_ancillas())
    try:
        ext = get_extension_scheme(scheme)
    except EquipartitionError:
        raise
    except ValueError as exc:
        # malformed definition files from the extensions directory
        raise InvalidParameter(f"cannot load extension schemes: {exc}") from exc
    vectors, ids = _class_families(n)
    extended = tuple([ext.extend(v, k) for v in family] for family in vectors)
    return _analyse(n, extended, ids, ancillas=k, scheme=ext.id, trace=trace)


def single_query_separable(classes: Sequence[Sequence[SignVector]]) -> bool:
    """True iff the spans of all classes are pairwise orthogonal."""
    if not classes or any(len(c) == 0 for c in classes):
        raise InvalidParameter("every class must contain at least one vector")
    lengths = {len(v) for c in classes for v in c}
    if len(lengths) != 1:
        raise DimensionMismatch(f"mixed vector lengths {sorted(lengths)} across classes")
    for i in range(len(classes)):
        for j in range(i + 1, len(classes)):
            if not spans_orthogonal(classes[i], classes[j]):
                return False
    return True
