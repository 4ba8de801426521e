from .exact import exact_rank, independent_subset, orthogonality_witness, spans_orthogonal
from .operators import compose, hadamard, identity, operator_tensor
from .states import apply, basis_state, projector_from_states, tensor
from .types import BitString, Operator, SignVector, StateVector, all_bitstrings, qubits_for_dim

__all__ = [
    "BitString",
    "StateVector",
    "Operator",
    "SignVector",
    "all_bitstrings",
    "qubits_for_dim",
    "basis_state",
    "tensor",
    "projector_from_states",
    "apply",
    "identity",
    "hadamard",
    "operator_tensor",
    "compose",
    "exact_rank",
    "independent_subset",
    "orthogonality_witness",
    "spans_orthogonal",
]
