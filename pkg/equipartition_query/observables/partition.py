"""Equi-partitions of basis labels (or of any finite universe of identifiers)."""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass
from typing import Callable, Dict, FrozenSet, Hashable, List, Sequence, Tuple

from ..config import get_max_qubits
from ..errors import InvalidParameter, NotAPartition, require_range
from ..core.types import BitString, all_bitstrings

_LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class EquiPartition:
    """Classes of labels with one outcome label per class.

    Disjointness, coverage and equal class sizes are not enforced here; they
    are what ``validate_partition`` and ``is_equi_partition`` test.
    """

    classes: Tuple[Tuple[Hashable, ...], ...]
    class_labels: Tuple[Hashable, ...]
    universe: FrozenSet[Hashable]

    def __post_init__(self) -> None:
        classes = tuple(tuple(c) for c in self.classes)
        labels = tuple(self.class_labels)
        if len(classes) != len(labels):
            raise InvalidParameter(f"{len(classes)} classes but {len(labels)} class labels")
        object.__setattr__(self, "classes", classes)
        object.__setattr__(self, "class_labels", labels)
        object.__setattr__(self, "universe", frozenset(self.universe))

    @classmethod
    def over_bitstrings(
        cls, classes: Sequence[Sequence[BitString]], class_labels: Sequence[Hashable] | None = None
    ) -> "EquiPartition":
        """Partition whose universe is every label of the members' common width."""
        widths = {b.width for c in classes for b in c}
        if len(widths) != 1:
            raise InvalidParameter(f"class members must share one width, got {sorted(widths)}")
        width = widths.pop()
        labels = tuple(class_labels) if class_labels is not None else tuple(range(len(classes)))
        return cls(tuple(tuple(c) for c in classes), labels, frozenset(all_bitstrings(width)))

    def class_of(self, label: Hashable) -> Hashable:
        for outcome, members in zip(self.class_labels, self.classes):
            if label in members:
                return outcome
        raise KeyError(label)

    def sizes(self) -> Tuple[int, ...]:
        return tuple(len(c) for c in self.classes)

    def as_dict(self) -> Dict[Hashable, Tuple[Hashable, ...]]:
        return dict(zip(self.class_labels, self.classes))


def partition_by_property(m: int, prop: Callable[[BitString], Hashable]) -> EquiPartition:
    """Group the 2^m basis labels by ``prop``; classes ordered by outcome, members canonically."""
    require_range("m", m, 1, get_max_qubits())
    groups: Dict[Hashable, List[BitString]] = {}
    for label in all_bitstrings(m):
        groups.setdefault(prop(label), []).append(label)
    outcomes = sorted(groups)
    _LOGGER.debug("partition of %d labels into %d classes", 1 << m, len(outcomes))
    return EquiPartition(
        classes=tuple(tuple(groups[o]) for o in outcomes),
        class_labels=tuple(outcomes),
        universe=frozenset(lbl for o in outcomes for lbl in groups[o]),
    )


def parity_partition(m: int) -> EquiPartition:
    """Even popcount -> outcome 0, odd popcount -> outcome 1; 2^(m-1) labels each."""
    return partition_by_property(m, lambda b: b.parity)


def validate_partition(p: EquiPartition) -> None:
    """Raise NotAPartition on overlapping classes, foreign members or uncovered labels."""
    counts = Counter(member for c in p.classes for member in c)
    overlap = sorted(str(k) for k, n in counts.items() if n > 1)
    if overlap:
        raise NotAPartition(f"labels in more than one class: {', '.join(overlap)}")
    seen = set(counts)
    foreign = sorted(str(k) for k in seen - p.universe)
    if foreign:
        raise NotAPartition(f"labels outside the universe: {', '.join(foreign)}")
    gap = sorted(str(k) for k in p.universe - seen)
    if gap:
        raise NotAPartition(f"labels not covered by any class: {', '.join(gap)}")


def is_equi_partition(p: EquiPartition) -> bool:
    validate_partition(p)
    return len(set(p.sizes())) <= 1


def is_proper_specification(m: int, prop: Callable[[BitString], Hashable]) -> bool:
    """Does ``prop`` equi-partition the m-partite basis into at least two classes?

    Parity qualifies for every m; a constant property carries no information
    and popcount is uneven from m = 2 on.
    """
    p = partition_by_property(m, prop)
    return len(p.classes) >= 2 and is_equi_partition(p)
