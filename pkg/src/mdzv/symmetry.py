"""Galois/cone-exchange symmetry of refined terms.

Generators come in Galois-conjugate pairs ``(base, conjugate)``.  When the
cone is conjugation-stable and every pair is summed over the same cone, the
relabelings generated by

* swapping the two members of a pair (Galois conjugation of one variable), and
* exchanging two pairs blockwise (renaming the summation variables)

leave every refined sum unchanged.  These relabelings form the group ``H``.

``H`` acts on the generator *labels*: relabeling by ``h`` sends the term with
appearance order ``(r(1), ..., r(k))`` to the one with order
``(h(r(1)), ..., h(r(k)))``, i.e. ``zeta^r == zeta^(h*r)``.  Two terms are
therefore equal when their exponents agree and ``r2 * r1.inverse()`` lies in
``H``; the classes are the cosets ``H*r``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .permutation import Permutation, symmetric_group
from .terms import Combination, RefinedTerm


@dataclass(frozen=True)
class PairingStructure:
    """Partition of ``{1..k}`` into ordered ``(base, conjugate)`` pairs."""

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        pairs = tuple((int(a), int(b)) for a, b in self.pairs)
        object.__setattr__(self, "pairs", pairs)
        pts = [x for p in pairs for x in p]
        if sorted(pts) != list(range(1, len(pts) + 1)):
            raise ValueError(f"pairs must partition 1..{len(pts)}: {pairs}")

    @property
    def k(self) -> int:
        return 2 * len(self.pairs)

    def conjugations(self) -> list[Permutation]:
        return [Permutation.from_cycles([p], self.k) for p in self.pairs]

    def exchange(self) -> Permutation | None:
        """Blockwise swap of the first two pairs, keeping base/conjugate roles."""
        if len(self.pairs) < 2:
            return None
        (a, b), (c, d) = self.pairs[:2]
        return Permutation.from_cycles([(a, c), (b, d)], self.k)

    def generators(self) -> list[Permutation]:
        gens = self.conjugations()
        ex = self.exchange()
        if ex is not None:
            gens.append(ex)
        return gens

    def conjugate_of(self, label: int) -> int:
        for a, b in self.pairs:
            if label == a:
                return b
            if label == b:
                return a
        raise KeyError(label)

    def __str__(self) -> str:
        return "{" + ",".join(f"({a},{b})" for a, b in self.pairs) + "}"


DEPTH1 = PairingStructure(((1, 2),))
STANDARD = PairingStructure(((1, 2), (3, 4)))
# Base order (a1, b1, a2, b2): the two embeddings of a and of b interleaved.
INTERLEAVED = PairingStructure(((1, 3), (2, 4)))


def default_pairing(k: int) -> PairingStructure:
    if k == 2:
        return DEPTH1
    if k == 4:
        return STANDARD
    return PairingStructure(tuple((2 * i + 1, 2 * i + 2) for i in range(k // 2)))


@lru_cache(maxsize=None)
def subgroup_H(pairing: PairingStructure) -> frozenset[Permutation]:
    """Closure of the pairing's symmetry generators under composition."""
    ident = Permutation.identity(pairing.k)
    gens = pairing.generators()
    group = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for g in frontier:
            for s in gens:
                h = s * g
                if h not in group:
                    group.add(h)
                    nxt.append(h)
        frontier = nxt
    return frozenset(group)


def same_class(r1: Permutation, r2: Permutation, pairing: PairingStructure) -> bool:
    return r2 * r1.inverse() in subgroup_H(pairing)


@lru_cache(maxsize=None)
def _canonical_perm(perm: Permutation, pairing: PairingStructure) -> Permutation:
    return min(h * perm for h in subgroup_H(pairing))


def canonicalize(term: RefinedTerm, pairing: PairingStructure) -> RefinedTerm:
    """Representative of ``term`` whose permutation is lexicographically least in ``H*perm``."""
    if term.k != pairing.k:
        raise ValueError(f"term has k={term.k} but pairing has k={pairing.k}")
    return RefinedTerm(_canonical_perm(term.perm, pairing), term.exponents)


def canonicalize_combination(comb: Combination, pairing: PairingStructure) -> Combination:
    out = Combination(pairing=pairing)
    for t, c in comb.items():
        out.add(canonicalize(t, pairing), c)
    return out


def cosets(pairing: PairingStructure) -> list[frozenset[Permutation]]:
    """Partition of the full symmetric group into classes ``H*r``, ordered by least element."""
    H = subgroup_H(pairing)
    remaining = set(symmetric_group(pairing.k))
    out = []
    while remaining:
        r = min(remaining)
        cls = frozenset(h * r for h in H)
        out.append(cls)
        remaining -= cls
    return out


def coset_representatives(pairing: PairingStructure) -> list[Permutation]:
    return [min(c) for c in cosets(pairing)]
