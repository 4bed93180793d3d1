"""Permutations of ``{1, ..., k}`` with cycle-notation parsing and printing.

Composition follows the function convention::

    (s * t)(i) == s(t(i))

so ``s * t`` applies ``t`` first.  Cycle notation lists each non-trivial
cycle starting from its smallest element, cycles ordered by that element,
and prints the identity as ``"(1)"``, e.g. ``"(13)(24)"`` or ``"(1342)"``.
"""
from __future__ import annotations

import itertools
import re
from typing import Iterable, Iterator, Sequence

_CYCLE_RE = re.compile(r"\(([0-9]+)\)")


class Permutation:
    """A bijection of ``{1, ..., k}`` stored in one-line form."""

    __slots__ = ("_images",)

    def __init__(self, images: Iterable[int]):
        images = tuple(int(i) for i in images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(images)}: {images}")
        self._images = images

    @classmethod
    def identity(cls, k: int) -> "Permutation":
        return cls(range(1, k + 1))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], k: int) -> "Permutation":
        images = list(range(1, k + 1))
        seen: set[int] = set()
        for cyc in cycles:
            for x in cyc:
                if not 1 <= x <= k:
                    raise ValueError(f"point {x} outside 1..{k}")
                if x in seen:
                    raise ValueError(f"point {x} appears twice")
                seen.add(x)
            for a, b in zip(cyc, tuple(cyc[1:]) + tuple(cyc[:1])):
                images[a - 1] = b
        return cls(images)

    @classmethod
    def parse(cls, text: str, k: int | None = None) -> "Permutation":
        """Parse cycle notation such as ``"(1)"``, ``"(23)"``, ``"(13)(24)"``.

        Points are single digits, as in the notation ``(1342)``.  ``k``
        defaults to the largest point mentioned.  Input that does not describe
        a bijection (repeated points, stray characters) raises ``ValueError``.
        """
        s = text.strip()
        if not s or _CYCLE_RE.sub("", s):
            raise ValueError(f"bad cycle notation: {text!r}")
        cycles = [tuple(int(c) for c in m) for m in _CYCLE_RE.findall(s)]
        top = max(max(c) for c in cycles)
        if k is None:
            k = top
        if len(cycles) > 1 and any(len(c) == 1 for c in cycles):
            raise ValueError(f"fixed points only allowed as the identity '(1)': {text!r}")
        if len(cycles) == 1 and len(cycles[0]) == 1:
            if top > k:
                raise ValueError(f"point {top} outside 1..{k}")
            return cls.identity(k)
        return cls.from_cycles(cycles, k)

    @property
    def degree(self) -> int:
        return len(self._images)

    @property
    def one_line(self) -> tuple[int, ...]:
        return self._images

    def __call__(self, i: int) -> int:
        return self._images[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if not isinstance(other, Permutation):
            return NotImplemented
        if other.degree != self.degree:
            raise ValueError("degree mismatch")
        return Permutation(self._images[j - 1] for j in other._images)

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for i, j in enumerate(self._images, start=1):
            inv[j - 1] = i
        return Permutation(inv)

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self._images, start=1))

    def cycles(self) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for start in range(1, self.degree + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            nxt = self(start)
            while nxt != start:
                cyc.append(nxt)
                seen.add(nxt)
                nxt = self(nxt)
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def __str__(self) -> str:
        cyc = self.cycles()
        if not cyc:
            return "(1)"
        return "".join("(" + "".join(str(x) for x in c) + ")" for c in cyc)

    def __repr__(self) -> str:
        return f"Permutation({list(self._images)})"

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self._images == other._images

    def __hash__(self) -> int:
        return hash(self._images)

    def __lt__(self, other: "Permutation") -> bool:
        return self._images < other._images


def symmetric_group(k: int) -> Iterator[Permutation]:
    """All permutations of degree ``k`` in lexicographic one-line order."""
    for images in itertools.permutations(range(1, k + 1)):
        yield Permutation(images)
