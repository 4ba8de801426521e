"""Boolean functions of n bits, their enumeration and functional parity.

A function is identified by its canonical index i = sum_x f(x) * 2^x, where
x runs over the inputs in canonical order (x = 0...0 first).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cached_property
from math import prod
from typing import FrozenSet, Iterable, Iterator, List, Sequence, Tuple, Union

from ..config import get_max_function_bits
from ..errors import DimensionMismatch, InvalidParameter, ParseError, require_range
from ..core.types import BitString, SignVector, qubits_for_dim

_LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class BooleanFunction:
    n: int
    truth_table: Tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise InvalidParameter(f"arity must be >= 1, got {self.n}")
        table = tuple(int(v) for v in self.truth_table)
        if len(table) != 1 << self.n:
            raise DimensionMismatch(f"truth table of length {len(table)} for n={self.n}, expected {1 << self.n}")
        if any(v not in (0, 1) for v in table):
            raise InvalidParameter(f"truth table entries must be 0/1, got {self.truth_table!r}")
        object.__setattr__(self, "truth_table", table)

    @classmethod
    def from_index(cls, n: int, index: int) -> "BooleanFunction":
        size = 1 << n
        if index < 0 or index >= 1 << size:
            raise InvalidParameter(f"index {index} out of range for n={n}")
        return cls(n, tuple((index >> x) & 1 for x in range(size)))

    @classmethod
    def parse(cls, text: str) -> "BooleanFunction":
        """Character k is f(canonical input k); "0110" is XOR of two bits."""
        s = (text or "").strip()
        if not s or any(c not in "01" for c in s):
            raise ParseError(f"truth table must be a string over {{0,1}}, got {text!r}")
        try:
            n = qubits_for_dim(len(s))
        except DimensionMismatch as ex:
            raise ParseError(f"truth table length {len(s)} is not 2^n for n >= 1") from ex
        if n < 1:
            raise ParseError(f"truth table length {len(s)} is not 2^n for n >= 1")
        return cls(n, tuple(int(c) for c in s))

    @classmethod
    def from_signs(cls, signs: Union[SignVector, Sequence[int]]) -> "BooleanFunction":
        vec = signs if isinstance(signs, SignVector) else SignVector(tuple(signs))
        entries = vec.entries
        return cls(qubits_for_dim(len(entries)), tuple((g + 1) // 2 for g in entries))

    @property
    def canonical_index(self) -> int:
        return sum(v << x for x, v in enumerate(self.truth_table))

    @cached_property
    def sign_signature(self) -> SignVector:
        return SignVector.from_bits(self.truth_table)

    def __call__(self, x: Union[BitString, int]) -> int:
        if isinstance(x, BitString):
            if x.width != self.n:
                raise DimensionMismatch(f"input of width {x.width} for an {self.n}-bit function")
            x = x.value
        return self.truth_table[x]

    def __str__(self) -> str:
        return "".join(str(v) for v in self.truth_table)


def functional_parity(f: BooleanFunction) -> int:
    """Product of the sign signature: +1 -> 0, -1 -> 1."""
    return 0 if prod(f.sign_signature.entries) == 1 else 1


def _check_arity(n: int) -> None:
    require_range("n", n, 1, get_max_function_bits())


def iter_functions(n: int) -> Iterator[BooleanFunction]:
    """Every function of n bits, ascending canonical index."""
    _check_arity(n)
    for index in range(1 << (1 << n)):
        yield BooleanFunction.from_index(n, index)


@dataclass(frozen=True)
class FunctionUniverse:
    n: int
    functions: Tuple[BooleanFunction, ...]

    def __len__(self) -> int:
        return len(self.functions)

    def __iter__(self) -> Iterator[BooleanFunction]:
        return iter(self.functions)

    def __getitem__(self, index: int) -> BooleanFunction:
        return self.functions[index]

    def by_parity(self, parity: int) -> List[BooleanFunction]:
        return [f for f in self.functions if functional_parity(f) == parity]


def enumerate_functions(n: int) -> FunctionUniverse:
    functions = tuple(iter_functions(n))
    _LOGGER.debug("enumerated %d functions of %d bits", len(functions), n)
    return FunctionUniverse(n=n, functions=functions)


def class_size_closed_form(n: int) -> int:
    """2^(2^n - 1) functions per parity class; no enumeration."""
    if n < 1:
        raise InvalidParameter(f"n must be >= 1, got {n}")
    return 1 << ((1 << n) - 1)


def paper_order(functions: Iterable[BooleanFunction]) -> List[BooleanFunction]:
    """Parity-major, then canonical index (the layout of the published tables)."""
    return sorted(functions, key=lambda f: (functional_parity(f), f.canonical_index))


@dataclass(frozen=True)
class ValueSet:
    ordered: Tuple[int, ...]
    distinct: FrozenSet[int]


def value_set(f: BooleanFunction) -> ValueSet:
    """The outputs f(0...0), ..., f(1...1) both in order and collapsed to a set."""
    return ValueSet(ordered=f.truth_table, distinct=frozenset(f.truth_table))


@dataclass(frozen=True)
class ValueUniverse:
    n: int
    value_sets: Tuple[ValueSet, ...]

    @property
    def total_values(self) -> int:
        """2^(2^n + n): every output of every function."""
        return sum(len(v.ordered) for v in self.value_sets)

    @property
    def distinct_sets(self) -> FrozenSet[FrozenSet[int]]:
        return frozenset(v.distinct for v in self.value_sets)


def value_universe(n: int) -> ValueUniverse:
    return ValueUniverse(n=n, value_sets=tuple(value_set(f) for f in iter_functions(n)))
