"""Shuffles of integration chains and their conversion to refined terms.

A *chain* is the ordered list of integration variables ``x_1 > x_2 > ... > 0``
of one simplex; a slot holds the label of the generator whose frequency
multiplies that variable in the exponent, or ``None``.  Integrating

    exp(-sum_j f_j x_j)   over   x_1 > ... > x_n > 0

variable by variable from the top gives ``prod_j 1/(f_1 + ... + f_j)``: every
slot contributes the sum of the frequencies at or above it.  A product of two
chain integrals is the sum over all interleavings of the two chains, which is
how the products below are expanded.
"""
from __future__ import annotations

import itertools
from math import comb
from typing import Iterable, Iterator, Optional, Sequence

from .errors import MalformedWord, MixedWeight, OverlapError
from .permutation import Permutation
from .symmetry import PairingStructure, canonicalize, default_pairing
from .terms import Combination, RefinedTerm

Chain = tuple[Optional[int], ...]
# (origin tag, label); tag 0 for the left chain, 1 for the right one
Word = tuple[tuple[int, Optional[int]], ...]


def enumerate_shuffles(m: int, n: int) -> Iterator[tuple[int, ...]]:
    """Yield the ``C(m+n, m)`` interleaving masks of an ``m``- and an ``n``-chain.

    A mask entry 0 takes the next slot of the left chain, 1 the next of the
    right one.  Masks come out in lexicographic order.
    """
    if m < 1 or n < 1:
        raise ValueError("chain lengths must be positive")
    size = m + n
    for left_pos in itertools.combinations(range(size), m):
        mask = [1] * size
        for p in left_pos:
            mask[p] = 0
        yield tuple(mask)


def interleave(a: Sequence, b: Sequence, mask: Sequence[int]) -> Word:
    ia = iter(a)
    ib = iter(b)
    return tuple((0, next(ia)) if bit == 0 else (1, next(ib)) for bit in mask)


def restrict(word: Word, tag: int) -> Chain:
    """Slots of ``word`` that came from chain ``tag``, in order."""
    return tuple(label for t, label in word if t == tag)


def shuffle_chains(a: Sequence[Optional[int]], b: Sequence[Optional[int]]) -> Iterator[Word]:
    """All order-preserving interleavings of two labelled chains."""
    shared = {x for x in a if x is not None} & {x for x in b if x is not None}
    if shared:
        raise OverlapError(f"chains share generator labels {sorted(shared)}")
    for mask in enumerate_shuffles(len(a), len(b)):
        yield interleave(a, b, mask)


def term_from_word(word: Iterable) -> RefinedTerm:
    """Refined term of the iterated integral over a single chain.

    Accepts either a :data:`Word` or a plain sequence of labels.  Exponent
    ``j`` counts the slots from the ``j``-th generator down to (excluding)
    the next one.
    """
    labels = [s[1] if isinstance(s, tuple) else s for s in word]
    if not labels or labels[0] is None:
        raise MalformedWord("the top slot must carry a generator")
    order: list[int] = []
    exps: list[int] = []
    for lab in labels:
        if lab is None:
            exps[-1] += 1
        else:
            order.append(lab)
            exps.append(1)
    if sorted(order) != list(range(1, len(order) + 1)):
        raise MalformedWord(f"generator labels {order} are not exactly 1..{len(order)}")
    return RefinedTerm(Permutation(order), tuple(exps))


def collect(terms: Iterable[RefinedTerm], pairing: PairingStructure | None = None,
            simplify: bool = False) -> Combination:
    """Multiplicities of ``terms``, optionally merged modulo the symmetry group."""
    out = Combination(pairing=pairing)
    shape = None
    for t in terms:
        if shape is None:
            shape = (t.k, t.weight)
            if pairing is None:
                pairing = out.pairing = default_pairing(t.k)
        elif (t.k, t.weight) != shape:
            raise MixedWeight(f"term {t} does not match k={shape[0]}, weight={shape[1]}")
        out.add(canonicalize(t, pairing) if simplify else t, 1)
    return out


def product_pairing(pa: PairingStructure, pb: PairingStructure) -> PairingStructure:
    shifted = tuple((x + pa.k, y + pa.k) for x, y in pb.pairs)
    return PairingStructure(pa.pairs + shifted)


def relabel_chain(chain: Sequence[Optional[int]], offset: int) -> Chain:
    return tuple(None if x is None else x + offset for x in chain)


def shuffle_product(a: RefinedTerm, b: RefinedTerm, pairing: PairingStructure | None = None,
                    simplify: bool = True) -> Combination:
    """Expand the product of two refined sums over independent variables.

    ``b``'s generators are relabelled ``k_a + 1, ..., k_a + k_b``.  The default
    pairing keeps each factor's own pairs, e.g. ``{(1,2),(3,4)}`` for two
    depth-one terms.
    """
    if pairing is None:
        pairing = product_pairing(default_pairing(a.k), default_pairing(b.k))
    words = shuffle_chains(a.chain(), relabel_chain(b.chain(), a.k))
    return collect((term_from_word(w) for w in words), pairing, simplify)


def expand_product(x: Combination, y: Combination, pairing: PairingStructure | None = None,
                   simplify: bool = True) -> Combination:
    """Bilinear extension of :func:`shuffle_product` to combinations."""
    out = Combination(pairing=pairing)
    for ta, ca in x.items():
        for tb, cb in y.items():
            part = shuffle_product(ta, tb, pairing, simplify)
            out.pairing = part.pairing
            for t, c in part.items():
                out.add(t, c * ca * cb)
    return out


def shuffle_count(m: int, n: int) -> int:
    return comb(m + n, m)


def letter_shuffle(u: Sequence, v: Sequence) -> Iterator[tuple]:
    """Classical recursive shuffle of two words, with multiplicity."""
    if not u:
        yield tuple(v)
        return
    if not v:
        yield tuple(u)
        return
    for w in letter_shuffle(u[1:], v):
        yield (u[0],) + w
    for w in letter_shuffle(u, v[1:]):
        yield (v[0],) + w
