"""Basis states, tensor products, projectors and operator application."""

from __future__ import annotations

import logging
from typing import Optional, Sequence

import numpy as np

from ..config import get_max_qubits, get_tolerance
from ..errors import DimensionMismatch, InvalidParameter, NonOrthonormalInput, SizeLimitExceeded
from .types import BitString, Operator, StateVector, qubits_for_dim

_LOGGER = logging.getLogger(__name__)


def basis_state(label: BitString) -> StateVector:
    """|x1...xm> as a unit vector with amplitude 1 at the canonical index."""
    if label.width > get_max_qubits():
        raise SizeLimitExceeded(f"basis state of width {label.width} exceeds the cap {get_max_qubits()}")
    amps = np.zeros(1 << label.width, dtype=np.complex128)
    amps[label.value] = 1.0
    return StateVector(amps)


def tensor(a: StateVector, b: StateVector) -> StateVector:
    """Kronecker product, left factor most significant."""
    if a.num_qubits + b.num_qubits > get_max_qubits():
        raise SizeLimitExceeded(
            f"tensor of {a.num_qubits}+{b.num_qubits} qubits exceeds the cap {get_max_qubits()}"
        )
    amps = np.kron(a.amplitudes, b.amplitudes)
    return StateVector(amps, normalized=a.normalized and b.normalized)


def projector_from_states(states: Sequence[StateVector], dim: Optional[int] = None) -> Operator:
    """Sum of |s><s| over a mutually orthonormal family.

    ``dim`` is required for the empty family (the zero projector) and must
    agree with the states otherwise.
    """
    tol = get_tolerance()
    if not states:
        if dim is None:
            raise InvalidParameter("projector of an empty family needs an explicit dim")
        qubits_for_dim(dim)
        return Operator(np.zeros((dim, dim), dtype=np.complex128))

    dims = {s.dim for s in states}
    if len(dims) != 1 or (dim is not None and dim not in dims):
        raise DimensionMismatch(f"states have dims {sorted(dims)}, requested dim {dim}")

    stack = np.stack([s.amplitudes for s in states])  # rows are kets
    gram = stack.conj() @ stack.T
    deviation = np.abs(gram - np.eye(len(states)))
    if np.max(deviation) > tol:
        i, j = np.unravel_index(int(np.argmax(deviation)), deviation.shape)
        raise NonOrthonormalInput(
            f"<s{i}|s{j}> = {gram[i, j]:.12g} deviates from {int(i == j)} by more than {tol}"
        )
    _LOGGER.debug("projector over %d states of dim %d", len(states), stack.shape[1])
    return Operator(stack.T @ stack.conj())


def apply(op: Operator, s: StateVector) -> StateVector:
    """Matrix-vector product; no implicit renormalization."""
    if op.dim != s.dim:
        raise DimensionMismatch(f"operator dim {op.dim} != state dim {s.dim}")
    out = op.matrix @ s.amplitudes
    norm_sq = float(np.vdot(out, out).real)
    return StateVector(out, normalized=abs(norm_sq - 1.0) <= get_tolerance())
