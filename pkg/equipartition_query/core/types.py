"""Value types for dense state and operator arithmetic.

All values are immutable after construction. Amplitude and matrix arrays are
copied on the way in and flagged read-only.

Basis order: the leftmost tensor factor is the most significant bit, so the
index of |x1...xm> is the integer read from the ket string left to right.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence, Tuple

import numpy as np

from ..config import get_max_operator_qubits, get_max_qubits, get_tolerance
from ..errors import DimensionMismatch, InvalidParameter, ParseError, SizeLimitExceeded, UnnormalizedState


def qubits_for_dim(dim: int) -> int:
    """Return m for dim = 2^m, or raise DimensionMismatch."""
    if dim < 1 or dim & (dim - 1):
        raise DimensionMismatch(f"dimension {dim} is not a power of 2")
    return dim.bit_length() - 1


@dataclass(frozen=True)
class BitString:
    bits: Tuple[int, ...]

    def __post_init__(self) -> None:
        bits = tuple(int(b) for b in self.bits)
        if not bits:
            raise InvalidParameter("BitString width must be >= 1")
        if any(b not in (0, 1) for b in bits):
            raise InvalidParameter(f"BitString entries must be 0/1, got {self.bits!r}")
        object.__setattr__(self, "bits", bits)

    @classmethod
    def from_int(cls, value: int, width: int) -> "BitString":
        if width < 1:
            raise InvalidParameter(f"BitString width must be >= 1, got {width}")
        if value < 0 or value >= (1 << width):
            raise InvalidParameter(f"value {value} does not fit in {width} bits")
        return cls(tuple((value >> (width - 1 - k)) & 1 for k in range(width)))

    @classmethod
    def parse(cls, text: str) -> "BitString":
        s = (text or "").strip()
        if s.startswith("|") and s.endswith(">"):
            s = s[1:-1]
        if not s or any(c not in "01" for c in s):
            raise ParseError(f"not a bit string: {text!r}")
        return cls(tuple(int(c) for c in s))

    @property
    def width(self) -> int:
        return len(self.bits)

    @property
    def value(self) -> int:
        out = 0
        for b in self.bits:
            out = (out << 1) | b
        return out

    @property
    def popcount(self) -> int:
        return sum(self.bits)

    @property
    def parity(self) -> int:
        return self.popcount % 2

    def __str__(self) -> str:
        return "".join(str(b) for b in self.bits)


def all_bitstrings(width: int) -> Iterator[BitString]:
    """All labels of the given width in canonical order."""
    for v in range(1 << width):
        yield BitString.from_int(v, width)


@dataclass(frozen=True, eq=False)
class StateVector:
    """Amplitudes over the 2^m computational basis.

    ``normalized=True`` asserts unit norm and is checked against the amplitude
    tolerance; pass ``normalized=False`` for intermediates.
    """

    amplitudes: np.ndarray
    normalized: bool = True

    def __post_init__(self) -> None:
        amps = np.array(self.amplitudes, dtype=np.complex128).reshape(-1)
        m = qubits_for_dim(amps.shape[0])
        if m > get_max_qubits():
            raise SizeLimitExceeded(f"state of {m} qubits exceeds the cap {get_max_qubits()}")
        if not np.all(np.isfinite(amps)):
            raise UnnormalizedState("amplitudes must be finite numbers")
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)
        if self.normalized and abs(self.norm_squared - 1.0) > get_tolerance():
            raise UnnormalizedState(f"sum of |amplitude|^2 is {self.norm_squared:.12g}, expected 1")

    @property
    def dim(self) -> int:
        return int(self.amplitudes.shape[0])

    @property
    def num_qubits(self) -> int:
        return qubits_for_dim(self.dim)

    @property
    def norm_squared(self) -> float:
        return float(np.vdot(self.amplitudes, self.amplitudes).real)

    def is_normalized(self, tol: float | None = None) -> bool:
        tol = get_tolerance() if tol is None else tol
        return abs(self.norm_squared - 1.0) <= tol

    def normalize(self) -> "StateVector":
        norm = np.sqrt(self.norm_squared)
        if norm == 0:
            raise UnnormalizedState("cannot normalize the zero vector")
        if not np.isfinite(norm):
            raise UnnormalizedState(f"cannot normalize a state of norm {norm}")
        return StateVector(self.amplitudes / norm)

    def allclose(self, other: "StateVector", tol: float | None = None) -> bool:
        tol = get_tolerance() if tol is None else tol
        return self.dim == other.dim and bool(np.max(np.abs(self.amplitudes - other.amplitudes)) <= tol)


@dataclass(frozen=True, eq=False)
class Operator:
    matrix: np.ndarray

    def __post_init__(self) -> None:
        mat = np.array(self.matrix, dtype=np.complex128)
        if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
            raise DimensionMismatch(f"operator must be square, got shape {mat.shape}")
        m = qubits_for_dim(mat.shape[0])
        if m > get_max_operator_qubits():
            raise SizeLimitExceeded(f"operator on {m} qubits exceeds the cap {get_max_operator_qubits()}")
        mat.setflags(write=False)
        object.__setattr__(self, "matrix", mat)

    @property
    def dim(self) -> int:
        return int(self.matrix.shape[0])

    @property
    def num_qubits(self) -> int:
        return qubits_for_dim(self.dim)

    def diagonal(self) -> np.ndarray:
        return np.diag(self.matrix)

    def is_hermitian(self, tol: float | None = None) -> bool:
        tol = get_tolerance() if tol is None else tol
        return bool(np.max(np.abs(self.matrix - self.matrix.conj().T), initial=0.0) <= tol)

    def is_idempotent(self, tol: float | None = None) -> bool:
        tol = get_tolerance() if tol is None else tol
        return bool(np.max(np.abs(self.matrix @ self.matrix - self.matrix), initial=0.0) <= tol)

    def is_unitary(self, tol: float | None = None) -> bool:
        tol = get_tolerance() if tol is None else tol
        eye = np.eye(self.dim, dtype=np.complex128)
        return bool(np.max(np.abs(self.matrix.conj().T @ self.matrix - eye), initial=0.0) <= tol)

    def is_permutation(self) -> bool:
        """Exactly one entry 1 per row and column, zeros elsewhere (exact)."""
        mat = self.matrix
        if np.any(mat.imag != 0):
            return False
        real = mat.real
        if not np.all((real == 0) | (real == 1)):
            return False
        return bool(np.all(real.sum(axis=0) == 1) and np.all(real.sum(axis=1) == 1))


@dataclass(frozen=True)
class SignVector:
    """Exact ±1 vector of length 2^n (a row of the sign tables)."""

    entries: Tuple[int, ...]

    def __post_init__(self) -> None:
        entries = tuple(self.entries)
        if not entries:
            raise InvalidParameter("SignVector must not be empty")
        qubits_for_dim(len(entries))
        for e in entries:
            if isinstance(e, bool) or not isinstance(e, (int, np.integer)) or e not in (-1, 1):
                raise InvalidParameter(f"SignVector entries must be exactly -1 or +1, got {e!r}")
        object.__setattr__(self, "entries", tuple(int(e) for e in entries))

    @classmethod
    def from_bits(cls, bits: Sequence[int]) -> "SignVector":
        """Recode 0 -> -1 and 1 -> +1."""
        return cls(tuple(2 * int(b) - 1 for b in bits))

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def dot(self, other: "SignVector") -> int:
        if len(other) != len(self):
            raise DimensionMismatch(f"sign vectors of length {len(self)} and {len(other)}")
        return sum(a * b for a, b in zip(self.entries, other.entries))

    def tensor(self, other: "SignVector") -> "SignVector":
        return SignVector(tuple(a * b for a in self.entries for b in other.entries))

    def __str__(self) -> str:
        return "(" + ",".join(f"{e:+d}" for e in self.entries) + ")"
