import functools
import itertools
import random

import pytest
import sympy

from equipartition_query.core import SignVector, exact_rank, independent_subset, orthogonality_witness, spans_orthogonal
from equipartition_query.errors import DimensionMismatch


def _sv(*entries: int) -> SignVector:
    return SignVector(entries)


def _gram_rank(vectors) -> int:
    # Rank of the Gram matrix over the rationals, via sympy.
    if not vectors:
        return 0
    rows = sympy.Matrix([list(v.entries) for v in vectors])
    return (rows * rows.T).rank()


def test_empty_family_has_rank_zero():
    assert exact_rank([]) == 0
    assert independent_subset([]) == []


def test_rank_of_small_families():
    assert exact_rank([_sv(1, 1), _sv(-1, -1)]) == 1
    assert exact_rank([_sv(1, 1), _sv(-1, 1)]) == 2
    assert exact_rank([_sv(1, 1, 1, 1), _sv(1, -1, 1, -1), _sv(1, 1, -1, -1), _sv(1, -1, -1, 1)]) == 4


def test_independent_subset_is_first_come():
    family = [_sv(1, 1), _sv(-1, -1), _sv(1, -1), _sv(-1, 1)]
    assert independent_subset(family) == [0, 2]


def test_mixed_lengths_raise():
    with pytest.raises(DimensionMismatch, match="mixed vector lengths"):
        exact_rank([_sv(1, 1), _sv(1, 1, 1, 1)])
    with pytest.raises(DimensionMismatch):
        spans_orthogonal([_sv(1, 1)], [_sv(1, 1, 1, 1)])


@functools.lru_cache(maxsize=None)
def _distinct_gram_rank(distinct) -> int:
    return _gram_rank([SignVector(e) for e in distinct])


def test_rank_matches_gram_oracle_exhaustively_for_short_vectors():
    # Repeated members never add rank, so the oracle is cached on the distinct set.
    for length in (1, 2, 4):
        pool = [SignVector(e) for e in itertools.product((-1, 1), repeat=length)]
        for size in range(1, 7):
            for family in itertools.combinations_with_replacement(pool, size):
                distinct = tuple(sorted({v.entries for v in family}))
                assert exact_rank(list(family)) == _distinct_gram_rank(distinct)


def test_rank_matches_gram_oracle_on_sampled_length_eight_families():
    rng = random.Random(7)
    pool = [SignVector(e) for e in itertools.product((-1, 1), repeat=8)]
    for _ in range(200):
        family = rng.choices(pool, k=rng.randint(1, 6))
        assert exact_rank(family) == _gram_rank(family)


def test_spans_orthogonal_examples():
    assert spans_orthogonal([_sv(1, 1)], [_sv(-1, 1)])
    assert not spans_orthogonal([_sv(1, 1)], [_sv(1, 1)])
    assert spans_orthogonal([], [_sv(1, 1)])


def test_spans_orthogonal_is_symmetric():
    rng = random.Random(3)
    pool = [SignVector(e) for e in itertools.product((-1, 1), repeat=4)]
    for _ in range(100):
        a = rng.choices(pool, k=rng.randint(1, 3))
        b = rng.choices(pool, k=rng.randint(1, 3))
        assert spans_orthogonal(a, b) == spans_orthogonal(b, a)


def test_orthogonality_witness_points_at_nonzero_pair():
    a = [_sv(1, 1, 1, 1), _sv(1, -1, 1, -1)]
    b = [_sv(1, 1, -1, -1), _sv(1, -1, 1, -1)]
    hit = orthogonality_witness(a, b)
    assert hit is not None
    i, j = hit
    assert a[i].dot(b[j]) != 0
    assert orthogonality_witness(a[:1], b[:1]) is None
