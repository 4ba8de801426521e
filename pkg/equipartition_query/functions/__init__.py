from .boolean import (
    BooleanFunction,
    FunctionUniverse,
    ValueSet,
    ValueUniverse,
    class_size_closed_form,
    enumerate_functions,
    functional_parity,
    iter_functions,
    paper_order,
    value_set,
    value_universe,
)
from .oracle import DeutschRun, DeutschStage, deutsch_single_query, deutsch_trace, oracle_matrix, oracle_permutation
from .span import (
    SpanReport,
    SpanWitness,
    ancilla_extended_span_analysis,
    parity_classes,
    single_query_separable,
    span_analysis,
)

__all__ = [
    "BooleanFunction",
    "FunctionUniverse",
    "ValueSet",
    "ValueUniverse",
    "enumerate_functions",
    "iter_functions",
    "functional_parity",
    "class_size_closed_form",
    "paper_order",
    "value_set",
    "value_universe",
    "oracle_permutation",
    "oracle_matrix",
    "DeutschRun",
    "DeutschStage",
    "deutsch_trace",
    "deutsch_single_query",
    "SpanReport",
    "SpanWitness",
    "parity_classes",
    "span_analysis",
    "ancilla_extended_span_analysis",
    "single_query_separable",
]
