from .partition import (
    EquiPartition,
    is_equi_partition,
    is_proper_specification,
    parity_partition,
    partition_by_property,
    validate_partition,
)
from .separability import bell_states, factorizability_determinant, is_factorizable, singlet
from .spectral import (
    Observable,
    OutcomeDistribution,
    SpectralTerm,
    observable_from_partition,
    query,
    qubit_observable,
    sample_query,
)

__all__ = [
    "EquiPartition",
    "parity_partition",
    "partition_by_property",
    "validate_partition",
    "is_equi_partition",
    "is_proper_specification",
    "Observable",
    "SpectralTerm",
    "OutcomeDistribution",
    "observable_from_partition",
    "query",
    "sample_query",
    "qubit_observable",
    "factorizability_determinant",
    "is_factorizable",
    "singlet",
    "bell_states",
]
