"""Integer-backed bitsets over dense 0-based indices.

Agents, states and actions are numbered densely; coalitions, states of affairs
and fixpoint iterates are plain ``int`` bitsets over those numbers.
"""
import numpy


def popcount(x):
    return bin(x).count('1')


def from_indices(indices):
    result = 0
    for i in indices:
        result |= 1 << i
    return result


def to_indices(bitset):
    indices = []
    bit = 0
    while bitset:
        if bitset & 1:
            indices.append(bit)
        bitset >>= 1
        bit += 1
    return indices


def full(num_bits):
    return (1 << num_bits) - 1


def is_subset(a, b):
    return a & ~b == 0


def subsets_by_cardinality(num_bits, include_empty=False):
    """All subsets of ``range(num_bits)`` ordered by (cardinality, value)."""
    subsets = range(0 if include_empty else 1, 1 << num_bits)
    return sorted(subsets, key=lambda s: (popcount(s), s))


def sort_key(bitset):
    return (popcount(bitset), bitset)


def to_bool_array(bitset, num_bits):
    array = numpy.zeros(num_bits, dtype=bool)
    for i in to_indices(bitset):
        array[i] = True
    return array


def from_bool_array(array):
    return from_indices(int(i) for i in numpy.flatnonzero(array))

# vim: tabstop=8 expandtab shiftwidth=4 softtabstop=4
