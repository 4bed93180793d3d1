"""Independent reference computations shared by the tests."""
from fractions import Fraction
from itertools import permutations


def chain_value(slots, freqs):
    """Iterated integral of one chain: each slot contributes 1/(sum of frequencies at or above it)."""
    total = 0
    value = Fraction(1)
    for label in slots:
        if label is not None:
            total += freqs[label]
        value /= total
    return value


def term_value(order, exps, freqs):
    """``1 / prod_j (f_order[0] + ... + f_order[j])^e_j`` straight from the definition."""
    value = Fraction(1)
    prefix = 0
    for label, e in zip(order, exps):
        prefix += freqs[label]
        value /= prefix ** e
    return value


def brute_masks(m, n):
    return set(permutations([0] * m + [1] * n))
