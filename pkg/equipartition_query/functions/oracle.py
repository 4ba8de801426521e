"""The standard oracle U_f|x>|y> = |x>|y xor f(x)> and the one-query parity circuit.

The input register is most significant and the ancilla y is the least
significant index bit, so |x>|y> sits at index 2x + y.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from ..config import get_max_operator_qubits, get_max_qubits, get_tolerance
from ..errors import InvalidObservable, SizeLimitExceeded, WrongArity
from ..core.operators import hadamard, identity, operator_tensor
from ..core.states import apply, basis_state, tensor
from ..core.types import BitString, Operator, StateVector
from ..observables.spectral import query, qubit_observable
from ..utils.trace import TraceLogger
from .boolean import BooleanFunction

_LOGGER = logging.getLogger(__name__)

_SQRT_HALF = 1.0 / np.sqrt(2.0)


def oracle_permutation(f: BooleanFunction) -> Tuple[int, ...]:
    """perm[i] is the basis index U_f sends basis index i to."""
    if f.n + 1 > get_max_qubits():
        raise SizeLimitExceeded(f"oracle on {f.n + 1} qubits exceeds the cap {get_max_qubits()}")
    return tuple(((i >> 1) << 1) | ((i & 1) ^ f.truth_table[i >> 1]) for i in range(1 << (f.n + 1)))


def oracle_matrix(f: BooleanFunction) -> Operator:
    """Dense permutation matrix of U_f, dimension 2^(n+1)."""
    if f.n + 1 > get_max_operator_qubits():
        raise SizeLimitExceeded(
            f"dense oracle on {f.n + 1} qubits exceeds the operator cap {get_max_operator_qubits()}"
        )
    perm = oracle_permutation(f)
    mat = np.zeros((len(perm), len(perm)), dtype=np.complex128)
    mat[list(perm), list(range(len(perm)))] = 1.0
    return Operator(mat)


@dataclass(frozen=True, eq=False)
class DeutschStage:
    name: str
    state: StateVector


@dataclass(frozen=True, eq=False)
class DeutschRun:
    function: BooleanFunction
    stages: Tuple[DeutschStage, ...]
    outcome: int
    probability: float


def minus_state() -> StateVector:
    """(|0> - |1>)/sqrt(2)."""
    return StateVector(_SQRT_HALF * np.array([1, -1], dtype=np.complex128))


def deutsch_trace(f: BooleanFunction, *, trace: Optional[TraceLogger] = None) -> DeutschRun:
    """Run |0>|-> -> H(x)I -> U_f -> H(x)I -> measure the input qubit, keeping every stage."""
    if f.n != 1:
        raise WrongArity(f"the single-query circuit takes a one-bit function, got n={f.n}")

    h_in = operator_tensor(hadamard(), identity(2))
    stages = [DeutschStage("prepare", tensor(basis_state(BitString((0,))), minus_state()))]
    stages.append(DeutschStage("hadamard_input", apply(h_in, stages[-1].state)))
    stages.append(DeutschStage("oracle", apply(oracle_matrix(f), stages[-1].state)))
    stages.append(DeutschStage("hadamard_input_again", apply(h_in, stages[-1].state)))

    dist = query(qubit_observable(2, 0), stages[-1].state)
    outcome = dist.deterministic_outcome(get_tolerance())
    if outcome is None:
        raise InvalidObservable(f"input-qubit measurement is not deterministic: {dist.as_dict()}")
    run = DeutschRun(function=f, stages=tuple(stages), outcome=int(outcome), probability=dist.probability(outcome))
    _LOGGER.debug("single-query circuit on %s -> %d (p=%.12g)", f, run.outcome, run.probability)
    if trace:
        trace.log(
            "deutsch_query",
            {"truth_table": str(f), "outcome": run.outcome, "probability": run.probability},
        )
    return run


def deutsch_single_query(f: BooleanFunction) -> int:
    """f(0) xor f(1) from exactly one application of U_f."""
    return deutsch_trace(f).outcome
