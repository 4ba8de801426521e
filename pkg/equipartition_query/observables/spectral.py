"""Observables as spectral decompositions, and single-query measurement."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, Hashable, Optional, Sequence, Tuple, Union

import numpy as np

from ..config import get_max_operator_qubits, get_tolerance
from ..errors import (
    DimensionMismatch,
    DuplicateEigenvalue,
    InvalidLabelWidth,
    InvalidObservable,
    UnnormalizedState,
    require_range,
)
from ..core.states import basis_state, projector_from_states
from ..core.types import BitString, Operator, StateVector
from .partition import EquiPartition, partition_by_property, validate_partition

_LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class SpectralTerm:
    eigenvalue: float
    projector: Operator
    label: Hashable = None


@dataclass(frozen=True, eq=False)
class Observable:
    """sum_k eigenvalue_k * P_k with orthogonal idempotent P_k summing to the identity."""

    terms: Tuple[SpectralTerm, ...]

    def __post_init__(self) -> None:
        terms = tuple(self.terms)
        if not terms:
            raise InvalidObservable("an observable needs at least one spectral term")
        object.__setattr__(self, "terms", terms)
        _check_spectral(terms, get_tolerance())

    @property
    def dim(self) -> int:
        return self.terms[0].projector.dim

    @property
    def eigenvalues(self) -> Tuple[float, ...]:
        return tuple(t.eigenvalue for t in self.terms)

    def projector(self, eigenvalue: float) -> Operator:
        for t in self.terms:
            if t.eigenvalue == eigenvalue:
                return t.projector
        raise KeyError(eigenvalue)

    def matrix(self) -> Operator:
        return Operator(sum(t.eigenvalue * t.projector.matrix for t in self.terms))


def _check_spectral(terms: Sequence[SpectralTerm], tol: float) -> None:
    values = [t.eigenvalue for t in terms]
    dupes = sorted({v for v in values if values.count(v) > 1})
    if dupes:
        raise DuplicateEigenvalue(f"eigenvalues must be distinct, repeated: {dupes}")
    dims = {t.projector.dim for t in terms}
    if len(dims) != 1:
        raise DimensionMismatch(f"projectors of differing dims {sorted(dims)}")
    dim = dims.pop()
    if all(_is_diagonal(t.projector) for t in terms):
        _check_diagonal_spectral(terms, tol)
        return
    total = np.zeros((dim, dim), dtype=np.complex128)
    for i, t in enumerate(terms):
        if not t.projector.is_idempotent(tol):
            raise InvalidObservable(f"projector for eigenvalue {t.eigenvalue} is not idempotent")
        for u in terms[i + 1 :]:
            if np.max(np.abs(t.projector.matrix @ u.projector.matrix)) > tol:
                raise InvalidObservable(
                    f"projectors for eigenvalues {t.eigenvalue} and {u.eigenvalue} are not orthogonal"
                )
        total += t.projector.matrix
    if np.max(np.abs(total - np.eye(dim))) > tol:
        raise InvalidObservable("projectors do not sum to the identity")


def _is_diagonal(op: Operator) -> bool:
    mat = op.matrix
    return not np.any(mat - np.diag(np.diag(mat)))


def _check_diagonal_spectral(terms: Sequence[SpectralTerm], tol: float) -> None:
    # Diagonal projectors: the same checks entry-wise, without dense products.
    diags = [t.projector.diagonal() for t in terms]
    for i, (t, d) in enumerate(zip(terms, diags)):
        if np.max(np.abs(d * d - d)) > tol:
            raise InvalidObservable(f"projector for eigenvalue {t.eigenvalue} is not idempotent")
        for u, e in zip(terms[i + 1 :], diags[i + 1 :]):
            if np.max(np.abs(d * e)) > tol:
                raise InvalidObservable(
                    f"projectors for eigenvalues {t.eigenvalue} and {u.eigenvalue} are not orthogonal"
                )
    if np.max(np.abs(sum(diags) - 1.0)) > tol:
        raise InvalidObservable("projectors do not sum to the identity")


def observable_from_partition(p: EquiPartition, eigenvalues: Sequence[float]) -> Observable:
    """One projector per class, sum of |label><label| over its members."""
    eigenvalues = [float(v) for v in eigenvalues]
    if len(eigenvalues) != len(p.classes):
        raise DimensionMismatch(f"{len(p.classes)} classes but {len(eigenvalues)} eigenvalues")
    if len(set(eigenvalues)) != len(eigenvalues):
        raise DuplicateEigenvalue(f"eigenvalues must be distinct, got {eigenvalues}")

    widths = set()
    for k, members in enumerate(p.classes):
        for label in members:
            if not isinstance(label, BitString):
                raise InvalidLabelWidth(f"class {k} member {label!r} is not a basis label")
            widths.add(label.width)
    if len(widths) != 1:
        raise InvalidLabelWidth(f"class members have widths {sorted(widths)}, expected one")
    width = widths.pop()
    require_range("label width", width, 1, get_max_operator_qubits())
    validate_partition(p)

    dim = 1 << width
    terms = []
    for value, outcome, members in zip(eigenvalues, p.class_labels, p.classes):
        proj = projector_from_states([basis_state(b) for b in members], dim=dim)
        terms.append(SpectralTerm(eigenvalue=value, projector=proj, label=outcome))
    _LOGGER.debug("observable on %d qubits with eigenvalues %s", width, eigenvalues)
    return Observable(tuple(terms))


@dataclass(frozen=True)
class OutcomeDistribution:
    """Born-rule probabilities in spectral-term order."""

    outcomes: Tuple[Tuple[float, float], ...]

    def probability(self, eigenvalue: float) -> float:
        for value, prob in self.outcomes:
            if value == eigenvalue:
                return prob
        raise KeyError(eigenvalue)

    def as_dict(self) -> Dict[float, float]:
        return dict(self.outcomes)

    def deterministic_outcome(self, tol: float | None = None) -> Optional[float]:
        """The eigenvalue carrying probability 1 (within tol), else None."""
        tol = get_tolerance() if tol is None else tol
        for value, prob in self.outcomes:
            if abs(prob - 1.0) <= tol:
                return value
        return None


def _check_query(observable: Observable, s: StateVector) -> None:
    if observable.dim != s.dim:
        raise DimensionMismatch(f"observable dim {observable.dim} != state dim {s.dim}")
    if not s.is_normalized():
        raise UnnormalizedState(f"query needs a normalized state, norm^2 = {s.norm_squared:.12g}")


def query(observable: Observable, s: StateVector) -> OutcomeDistribution:
    """P(lambda) = <s|P_lambda|s> for every spectral term."""
    _check_query(observable, s)
    outcomes = []
    for t in observable.terms:
        prob = float(np.vdot(s.amplitudes, t.projector.matrix @ s.amplitudes).real)
        outcomes.append((t.eigenvalue, max(prob, 0.0)))
    return OutcomeDistribution(tuple(outcomes))


def sample_query(
    observable: Observable,
    s: StateVector,
    rng: Union[np.random.Generator, int, None] = None,
) -> Tuple[float, StateVector]:
    """Draw one outcome and return it with the collapsed state P s / |P s|."""
    dist = query(observable, s)
    gen = rng if isinstance(rng, np.random.Generator) else np.random.default_rng(rng)
    probs = np.array([p for _, p in dist.outcomes])
    k = int(gen.choice(len(probs), p=probs / probs.sum()))
    proj = observable.terms[k].projector.matrix
    collapsed = proj @ s.amplitudes
    return dist.outcomes[k][0], StateVector(collapsed / np.linalg.norm(collapsed))


def qubit_observable(m: int, qubit: int) -> Observable:
    """Computational-basis measurement of one qubit (0 = leftmost) of an m-qubit register."""
    if not 0 <= qubit < m:
        raise DimensionMismatch(f"qubit {qubit} outside a {m}-qubit register")
    p = partition_by_property(m, lambda b: b.bits[qubit])
    return observable_from_partition(p, p.class_labels)
