"""Factorizability of two-partite pure states, and the Bell basis."""

from __future__ import annotations

from typing import Dict

import numpy as np

from ..config import get_tolerance
from ..errors import WrongDimension
from ..core.types import StateVector

_SQRT_HALF = 1.0 / np.sqrt(2.0)


def factorizability_determinant(s: StateVector) -> complex:
    """a00*a11 - a01*a10 over the canonical basis order |00>,|01>,|10>,|11>."""
    if s.dim != 4:
        raise WrongDimension(f"factorizability needs a two-qubit state (dim 4), got dim {s.dim}")
    a00, a01, a10, a11 = (complex(x) for x in s.amplitudes)
    return a00 * a11 - a01 * a10


def is_factorizable(s: StateVector, tol: float | None = None) -> bool:
    """True iff the state is a product of single-qubit states, up to ``tol``."""
    tol = get_tolerance() if tol is None else tol
    return abs(factorizability_determinant(s)) <= tol


def singlet() -> StateVector:
    """(|01> - |10>)/sqrt(2), tuple form (0, 1, -1, 0)/sqrt(2)."""
    return StateVector(_SQRT_HALF * np.array([0, 1, -1, 0], dtype=np.complex128))


def bell_states() -> Dict[str, StateVector]:
    return {
        "phi_plus": StateVector(_SQRT_HALF * np.array([1, 0, 0, 1], dtype=np.complex128)),
        "phi_minus": StateVector(_SQRT_HALF * np.array([1, 0, 0, -1], dtype=np.complex128)),
        "psi_plus": StateVector(_SQRT_HALF * np.array([0, 1, 1, 0], dtype=np.complex128)),
        "psi_minus": singlet(),
    }
