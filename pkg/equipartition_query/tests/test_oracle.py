import numpy as np
import pytest

from equipartition_query.core import BitString, all_bitstrings, apply, basis_state
from equipartition_query.errors import SizeLimitExceeded, WrongArity
from equipartition_query.functions import (
    BooleanFunction,
    deutsch_single_query,
    deutsch_trace,
    functional_parity,
    iter_functions,
    oracle_matrix,
    oracle_permutation,
)
from equipartition_query.utils.trace import build_trace_logger, read_trace


def _all_functions_up_to_three():
    for n in (1, 2, 3):
        yield from iter_functions(n)


def test_constant_zero_oracle_is_identity():
    u = oracle_matrix(BooleanFunction.parse("00"))
    assert np.array_equal(u.matrix, np.eye(4))


def test_identity_function_oracle_is_controlled_not():
    assert oracle_permutation(BooleanFunction.parse("01")) == (0, 1, 3, 2)


def test_every_small_oracle_is_an_involutive_permutation():
    count = 0
    for f in _all_functions_up_to_three():
        u = oracle_matrix(f)
        assert u.dim == 1 << (f.n + 1)
        assert u.is_permutation()
        assert u.is_unitary()
        assert np.array_equal(u.matrix @ u.matrix, np.eye(u.dim))
        count += 1
    assert count == 272


def test_every_small_oracle_matches_truth_table():
    for f in _all_functions_up_to_three():
        u = oracle_matrix(f)
        for x in all_bitstrings(f.n):
            for y in (0, 1):
                label = BitString(x.bits + (y,))
                out = apply(u, basis_state(label))
                expected = BitString(x.bits + (y ^ f(x),))
                assert np.array_equal(out.amplitudes, basis_state(expected).amplitudes)


def test_oracle_operator_cap(monkeypatch):
    monkeypatch.setenv("EQUIPARTITION_MAX_OPERATOR_QUBITS", "2")
    with pytest.raises(SizeLimitExceeded, match="operator cap"):
        oracle_matrix(BooleanFunction.parse("0110"))


@pytest.mark.parametrize("table,expected", [("00", 0), ("11", 0), ("01", 1), ("10", 1)])
def test_single_query_returns_functional_parity(table, expected):
    f = BooleanFunction.parse(table)
    assert deutsch_single_query(f) == expected == functional_parity(f)
    run = deutsch_trace(f)
    assert run.probability == pytest.approx(1.0, abs=1e-9)


def test_single_query_stages():
    run = deutsch_trace(BooleanFunction.parse("01"))
    assert [s.name for s in run.stages] == ["prepare", "hadamard_input", "oracle", "hadamard_input_again"]
    h = 1 / np.sqrt(2)
    assert np.allclose(run.stages[0].state.amplitudes, [h, -h, 0, 0])
    assert np.allclose(run.stages[-1].state.amplitudes, [0, 0, h, -h])


def test_single_query_needs_one_bit_function():
    with pytest.raises(WrongArity):
        deutsch_single_query(BooleanFunction.parse("0110"))


def test_single_query_writes_trace(tmp_path):
    path = tmp_path / "trace.jsonl"
    deutsch_trace(BooleanFunction.parse("10"), trace=build_trace_logger(path))
    records = read_trace(path)
    assert records[-1]["phase"] == "deutsch_query"
    assert records[-1]["payload"]["outcome"] == 1
