from functools import reduce
from operator import xor

import pytest

from equipartition_query.core import BitString, SignVector
from equipartition_query.errors import DimensionMismatch, InvalidParameter, ParseError, SizeLimitExceeded
from equipartition_query.functions import (
    BooleanFunction,
    class_size_closed_form,
    enumerate_functions,
    functional_parity,
    iter_functions,
    paper_order,
    parity_classes,
    value_set,
    value_universe,
)
from equipartition_query.observables import is_equi_partition


def test_truth_table_string_is_canonical_order():
    xor2 = BooleanFunction.parse("0110")
    assert xor2.n == 2
    assert xor2.canonical_index == 6
    assert xor2(BitString.parse("01")) == 1
    assert xor2(3) == 0
    assert list(xor2.sign_signature) == [-1, 1, 1, -1]
    assert str(xor2) == "0110"


def test_canonical_index_round_trips():
    for f in iter_functions(2):
        assert BooleanFunction.from_index(2, f.canonical_index) == f
        assert BooleanFunction.from_signs(f.sign_signature) == f


def test_parse_errors():
    for bad in ("", "012", "011", "1"):
        with pytest.raises(ParseError):
            BooleanFunction.parse(bad)


def test_construction_errors():
    with pytest.raises(DimensionMismatch):
        BooleanFunction(2, (0, 1))
    with pytest.raises(InvalidParameter):
        BooleanFunction(1, (0, 2))
    with pytest.raises(InvalidParameter):
        BooleanFunction.from_index(1, 16)
    with pytest.raises(DimensionMismatch):
        BooleanFunction.parse("01")(BitString.parse("00"))


def test_one_bit_parities():
    assert functional_parity(BooleanFunction.parse("00")) == 0
    assert functional_parity(BooleanFunction.parse("11")) == 0
    assert functional_parity(BooleanFunction.parse("01")) == 1
    assert functional_parity(BooleanFunction.parse("10")) == 1


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_parity_is_xor_of_truth_table(n):
    universe = enumerate_functions(n)
    assert len(universe) == 1 << (1 << n)
    ones = 0
    for f in universe:
        p = functional_parity(f)
        assert p == reduce(xor, f.truth_table)
        ones += p
    assert ones == class_size_closed_form(n)


def test_enumeration_is_strictly_increasing():
    indices = [f.canonical_index for f in iter_functions(3)]
    assert indices == list(range(256))


def test_enumeration_cap():
    with pytest.raises(SizeLimitExceeded):
        enumerate_functions(5)
    with pytest.raises(InvalidParameter):
        enumerate_functions(0)


def test_closed_form_needs_no_enumeration():
    assert class_size_closed_form(1) == 2
    assert class_size_closed_form(5) == 2**31
    with pytest.raises(InvalidParameter):
        class_size_closed_form(0)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_parity_classes_equi_partition(n):
    p = parity_classes(n)
    assert is_equi_partition(p)
    assert p.sizes() == (class_size_closed_form(n),) * 2


def test_paper_order_is_parity_major():
    ordered = paper_order(enumerate_functions(1))
    assert [str(f) for f in ordered] == ["00", "11", "10", "01"]


def test_universe_by_parity():
    universe = enumerate_functions(2)
    evens = universe.by_parity(0)
    assert len(evens) == 8
    assert all(functional_parity(f) == 0 for f in evens)
    assert universe[6] == BooleanFunction.parse("0110")


def test_value_set_views():
    v = value_set(BooleanFunction(2, (0, 0, 0, 0)))
    assert v.ordered == (0, 0, 0, 0)
    assert v.distinct == frozenset({0})
    v = value_set(BooleanFunction.from_signs(SignVector((-1, 1))))
    assert v.ordered == (0, 1)
    assert v.distinct == frozenset({0, 1})
    assert value_set(BooleanFunction.from_signs((-1, 1, 1, -1))).ordered == (0, 1, 1, 0)


def test_value_universe_counts():
    u = value_universe(2)
    assert u.total_values == 2 ** (4 + 2)
    assert u.distinct_sets == frozenset({frozenset({0}), frozenset({1}), frozenset({0, 1})})
