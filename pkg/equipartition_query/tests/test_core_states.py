import numpy as np
import pytest

from equipartition_query.core import (
    BitString,
    Operator,
    StateVector,
    apply,
    basis_state,
    compose,
    hadamard,
    identity,
    operator_tensor,
    projector_from_states,
    tensor,
)
from equipartition_query.errors import (
    DimensionMismatch,
    InvalidParameter,
    NonOrthonormalInput,
    ParseError,
    SizeLimitExceeded,
    UnnormalizedState,
)

SQRT_HALF = 1 / np.sqrt(2)


def _plus() -> StateVector:
    return StateVector(np.array([1, 1]) * SQRT_HALF)


def test_bitstring_value_is_read_left_to_right():
    b = BitString.parse("|011>")
    assert b.width == 3
    assert b.value == 3
    assert b.popcount == 2
    assert b.parity == 0
    assert str(BitString.from_int(6, 3)) == "110"


def test_bitstring_rejects_bad_input():
    with pytest.raises(ParseError, match="not a bit string"):
        BitString.parse("012")
    with pytest.raises(InvalidParameter, match="does not fit"):
        BitString.from_int(4, 2)


def test_basis_state_places_single_unit_amplitude():
    s = basis_state(BitString.parse("01"))
    assert s.dim == 4
    assert s.num_qubits == 2
    assert list(s.amplitudes) == [0, 1, 0, 0]
    assert s.is_normalized()


def test_tensor_matches_basis_labels_and_is_associative():
    zero, one = basis_state(BitString((0,))), basis_state(BitString((1,)))
    assert np.array_equal(tensor(zero, one).amplitudes, basis_state(BitString.parse("01")).amplitudes)

    a, b, c = _plus(), one, StateVector(np.array([0.6, 0.8j]))
    left = tensor(tensor(a, b), c)
    right = tensor(a, tensor(b, c))
    assert np.array_equal(left.amplitudes, right.amplitudes)
    assert left.is_normalized()


def test_tensor_respects_qubit_cap(monkeypatch):
    monkeypatch.setenv("EQUIPARTITION_MAX_QUBITS", "3")
    two = basis_state(BitString.parse("00"))
    with pytest.raises(SizeLimitExceeded):
        tensor(two, two)


def test_state_vector_validation():
    with pytest.raises(DimensionMismatch, match="not a power of 2"):
        StateVector(np.ones(3) / np.sqrt(3))
    with pytest.raises(UnnormalizedState):
        StateVector(np.array([1.0, 1.0]))
    raw = StateVector(np.array([3.0, 4.0]), normalized=False)
    assert raw.norm_squared == pytest.approx(25.0)
    assert raw.normalize().allclose(StateVector(np.array([0.6, 0.8])))


def test_state_vector_rejects_non_finite_amplitudes():
    for bad in (np.nan, np.inf, complex(0, np.nan)):
        with pytest.raises(UnnormalizedState, match="finite"):
            StateVector(np.array([bad, 0, 0, 0]))
        with pytest.raises(UnnormalizedState, match="finite"):
            StateVector(np.array([bad, 0]), normalized=False)


def test_normalize_rejects_overflowing_norm():
    huge = StateVector(np.array([1e200, 1e200]), normalized=False)
    with pytest.raises(UnnormalizedState, match="cannot normalize"):
        huge.normalize()
    with pytest.raises(UnnormalizedState):
        StateVector(np.array([1e200, 0.0]))


def test_state_amplitudes_are_read_only():
    s = _plus()
    with pytest.raises(ValueError):
        s.amplitudes[0] = 0


def test_projector_from_orthonormal_family_is_hermitian_idempotent():
    states = [basis_state(BitString.parse(x)) for x in ("00", "11")]
    p = projector_from_states(states)
    assert p.is_idempotent()
    assert p.is_hermitian()
    assert list(p.diagonal().real) == [1, 0, 0, 1]


def test_projector_from_superposition_family():
    minus = StateVector(np.array([1, -1]) * SQRT_HALF)
    p = projector_from_states([_plus(), minus])
    assert np.allclose(p.matrix, np.eye(2))


def test_projector_rejects_non_orthonormal_family():
    with pytest.raises(NonOrthonormalInput):
        projector_from_states([basis_state(BitString((0,))), _plus()])


def test_projector_of_empty_family_needs_dim():
    with pytest.raises(InvalidParameter, match="explicit dim"):
        projector_from_states([])
    zero = projector_from_states([], dim=4)
    assert not np.any(zero.matrix)


def test_projector_rejects_dim_mismatch():
    with pytest.raises(DimensionMismatch):
        projector_from_states([basis_state(BitString((0,)))], dim=4)


def test_apply_hadamard_and_dimension_check():
    out = apply(hadamard(), basis_state(BitString((0,))))
    assert out.allclose(_plus())
    assert out.normalized
    with pytest.raises(DimensionMismatch):
        apply(identity(4), _plus())


def test_apply_does_not_renormalize():
    half = Operator(np.eye(2) * 0.5)
    out = apply(half, _plus())
    assert not out.normalized
    assert out.norm_squared == pytest.approx(0.25)


def test_operator_algebra():
    h = hadamard()
    assert h.is_unitary()
    assert np.allclose(compose(h, h).matrix, np.eye(2))
    hi = operator_tensor(h, identity(2))
    assert hi.dim == 4
    assert hi.num_qubits == 2
    with pytest.raises(DimensionMismatch):
        compose(h, hi)
    with pytest.raises(DimensionMismatch, match="square"):
        Operator(np.zeros((2, 4)))


def test_operator_cap(monkeypatch):
    monkeypatch.setenv("EQUIPARTITION_MAX_OPERATOR_QUBITS", "2")
    with pytest.raises(SizeLimitExceeded):
        identity(8)


def test_is_permutation_is_exact():
    swap = Operator(np.array([[0, 1], [1, 0]]))
    assert swap.is_permutation()
    assert not hadamard().is_permutation()
    assert not Operator(np.array([[1, 0], [0, 1 + 1e-15]])).is_permutation()
