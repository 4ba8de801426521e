import numpy as np
import pytest

from equipartition_query.core import BitString, Operator, StateVector, all_bitstrings, basis_state, identity
from equipartition_query.errors import (
    DimensionMismatch,
    DuplicateEigenvalue,
    InvalidLabelWidth,
    InvalidObservable,
    NotAPartition,
    SizeLimitExceeded,
    UnnormalizedState,
)
from equipartition_query.observables import (
    EquiPartition,
    Observable,
    SpectralTerm,
    observable_from_partition,
    parity_partition,
    query,
    qubit_observable,
    sample_query,
)

TOL = 1e-9


def _parity_observable(m: int) -> Observable:
    return observable_from_partition(parity_partition(m), [0, 1])


def test_two_qubit_parity_projectors():
    obs = _parity_observable(2)
    assert obs.eigenvalues == (0.0, 1.0)
    assert list(obs.projector(0.0).diagonal().real) == [1, 0, 0, 1]
    assert list(obs.projector(1.0).diagonal().real) == [0, 1, 1, 0]
    assert list(obs.matrix().diagonal().real) == [0, 1, 1, 0]


@pytest.mark.parametrize("m", range(1, 9))
def test_parity_projector_algebra(m):
    obs = _parity_observable(m)
    dim = 1 << m
    total = np.zeros((dim, dim), dtype=complex)
    for t in obs.terms:
        p = t.projector.matrix
        assert np.max(np.abs(p @ p - p)) <= TOL
        assert np.max(np.abs(p - p.conj().T)) <= TOL
        total += p
    assert np.max(np.abs(total - np.eye(dim))) <= TOL
    p0, p1 = (t.projector.matrix for t in obs.terms)
    assert np.max(np.abs(p0 @ p1)) <= TOL


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_basis_state_query_is_deterministic_parity(m):
    obs = _parity_observable(m)
    for label in all_bitstrings(m):
        dist = query(obs, basis_state(label))
        assert dist.deterministic_outcome() == label.parity


def test_superposition_query_returns_born_distribution():
    obs = _parity_observable(2)
    s = StateVector(np.array([1, 1, 0, 0]) / np.sqrt(2))
    dist = query(obs, s)
    assert dist.probability(0.0) == pytest.approx(0.5)
    assert dist.probability(1.0) == pytest.approx(0.5)
    assert dist.deterministic_outcome() is None


def test_query_checks_dimension_and_normalization():
    obs = _parity_observable(2)
    with pytest.raises(DimensionMismatch):
        query(obs, basis_state(BitString.parse("0")))
    with pytest.raises(UnnormalizedState):
        query(obs, StateVector(np.array([1, 1, 0, 0]), normalized=False))


def test_sample_query_collapses_onto_the_drawn_class():
    obs = _parity_observable(2)
    s = StateVector(np.array([1, 1, 0, 0]) / np.sqrt(2))
    seen = set()
    for seed in range(20):
        value, collapsed = sample_query(obs, s, seed)
        seen.add(value)
        expected = "00" if value == 0.0 else "01"
        assert collapsed.allclose(basis_state(BitString.parse(expected)))
    assert seen == {0.0, 1.0}


def test_sample_query_is_reproducible_with_seed():
    obs = _parity_observable(3)
    s = StateVector(np.ones(8) / np.sqrt(8))
    draws = [sample_query(obs, s, np.random.default_rng(11))[0] for _ in range(3)]
    assert len(set(draws)) == 1


def test_observable_from_partition_errors():
    p = parity_partition(2)
    with pytest.raises(DimensionMismatch, match="2 classes but 3 eigenvalues"):
        observable_from_partition(p, [0, 1, 2])
    with pytest.raises(DuplicateEigenvalue):
        observable_from_partition(p, [1, 1])
    with pytest.raises(InvalidLabelWidth):
        observable_from_partition(EquiPartition(classes=[[0], [1]], class_labels=[0, 1], universe=[0, 1]), [0, 1])
    gap = EquiPartition.over_bitstrings([[BitString.parse("00")], [BitString.parse("11")]])
    with pytest.raises(NotAPartition):
        observable_from_partition(gap, [0, 1])


def test_observable_from_partition_respects_operator_cap(monkeypatch):
    monkeypatch.setenv("EQUIPARTITION_MAX_OPERATOR_QUBITS", "3")
    with pytest.raises(SizeLimitExceeded):
        _parity_observable(4)


def test_observable_rejects_bad_spectral_terms():
    half = Operator(np.eye(2) * 0.5)
    with pytest.raises(InvalidObservable, match="not idempotent"):
        Observable((SpectralTerm(0.0, half), SpectralTerm(1.0, half)))
    with pytest.raises(InvalidObservable, match="sum to the identity"):
        Observable((SpectralTerm(0.0, Operator(np.diag([1, 0]))),))
    with pytest.raises(DuplicateEigenvalue):
        Observable((SpectralTerm(1.0, identity(2)), SpectralTerm(1.0, identity(2))))
    plus = Operator(np.full((2, 2), 0.5))
    with pytest.raises(InvalidObservable, match="not orthogonal"):
        Observable((SpectralTerm(0.0, plus), SpectralTerm(1.0, identity(2))))


def test_qubit_observable_reads_one_position():
    obs = qubit_observable(2, 0)
    assert query(obs, basis_state(BitString.parse("10"))).deterministic_outcome() == 1
    assert query(obs, basis_state(BitString.parse("01"))).deterministic_outcome() == 0
    with pytest.raises(DimensionMismatch):
        qubit_observable(2, 2)
