"""Equi-partition parity queries (equipartition_query).

Dense state/operator arithmetic, parity observables over m-partite binary
states, and single-query analysis of functional parity over all Boolean
functions of n bits.
"""

__all__ = []
