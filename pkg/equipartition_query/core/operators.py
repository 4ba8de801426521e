"""Standard operators and operator algebra."""

from __future__ import annotations

import numpy as np

from ..errors import DimensionMismatch
from .types import Operator, qubits_for_dim

_SQRT_HALF = 1.0 / np.sqrt(2.0)


def identity(dim: int) -> Operator:
    qubits_for_dim(dim)
    return Operator(np.eye(dim, dtype=np.complex128))


def hadamard() -> Operator:
    return Operator(_SQRT_HALF * np.array([[1, 1], [1, -1]], dtype=np.complex128))


def operator_tensor(a: Operator, b: Operator) -> Operator:
    """Kronecker product of operators, left factor most significant."""
    return Operator(np.kron(a.matrix, b.matrix))


def compose(a: Operator, b: Operator) -> Operator:
    """The product a·b (b acts first)."""
    if a.dim != b.dim:
        raise DimensionMismatch(f"cannot compose operators of dims {a.dim} and {b.dim}")
    return Operator(a.matrix @ b.matrix)
