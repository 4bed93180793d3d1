"""Refined MDZV terms and integer linear combinations of them.

A refined term ``zeta^rho(e_1, ..., e_k)`` is the lattice sum of

    1 / (a_{rho(1)})^{e_1} (a_{rho(1)} + a_{rho(2)})^{e_2} ... (a_1 + ... + a_k)^{e_k}

where ``a_1, ..., a_k`` are the generator frequencies.  Exponents are listed
in prefix-sum order, so ``zeta^(1)(1,3)`` is ``sum 1/(a_1 (a_1 + a_2)^3)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from .permutation import Permutation

COEFF_LIMIT = 2**63


@dataclass(frozen=True)
class RefinedTerm:
    perm: Permutation
    exponents: tuple[int, ...]

    def __post_init__(self):
        exps = tuple(int(e) for e in self.exponents)
        object.__setattr__(self, "exponents", exps)
        if len(exps) != self.perm.degree:
            raise ValueError(
                f"{len(exps)} exponents for a permutation of degree {self.perm.degree}"
            )
        if any(e < 1 for e in exps):
            raise ValueError(f"exponents must be positive: {exps}")

    @classmethod
    def make(cls, perm: str | Permutation, exponents: Iterable[int]) -> "RefinedTerm":
        exponents = tuple(exponents)
        if isinstance(perm, str):
            perm = Permutation.parse(perm, len(exponents))
        return cls(perm, exponents)

    @classmethod
    def parse(cls, text: str) -> "RefinedTerm":
        """Parse ``"<perm>:<e1>,<e2>[,<e3>,<e4>]"``, e.g. ``"(23):1,2,1,4"``.

        A semicolon may stand in for any comma between exponents.
        """
        perm_text, sep, exps_text = text.partition(":")
        if not sep:
            raise ValueError(f"expected '<perm>:<exponents>', got {text!r}")
        exps = tuple(int(x) for x in exps_text.replace(";", ",").split(","))
        return cls.make(perm_text, exps)

    @property
    def k(self) -> int:
        return len(self.exponents)

    @property
    def weight(self) -> int:
        return sum(self.exponents)

    @property
    def order(self) -> tuple[int, ...]:
        """Generator labels in the order they enter the prefix sums."""
        return self.perm.one_line

    def chain(self) -> tuple[int | None, ...]:
        """The single integration chain whose iterated integral is this term."""
        slots: list[int | None] = []
        for label, e in zip(self.order, self.exponents):
            slots.append(label)
            slots.extend([None] * (e - 1))
        return tuple(slots)

    def sort_key(self):
        return (self.k, self.order, tuple(-e for e in self.exponents))

    def __str__(self) -> str:
        return f"{self.perm}:{','.join(map(str, self.exponents))}"


class Combination:
    """Finite integer linear combination of refined terms.

    Zero coefficients are never stored.  Iteration yields ``(term, coeff)``
    pairs in a fixed order (permutation, then exponents descending).
    """

    def __init__(self, terms: Mapping[RefinedTerm, int] | Iterable[tuple[RefinedTerm, int]] = (),
                 pairing=None):
        self._terms: dict[RefinedTerm, int] = {}
        self.pairing = pairing
        items = terms.items() if isinstance(terms, Mapping) else terms
        for term, coeff in items:
            self.add(term, coeff)

    def add(self, term: RefinedTerm, coeff: int = 1) -> None:
        c = self._terms.get(term, 0) + int(coeff)
        if abs(c) >= COEFF_LIMIT:
            raise OverflowError(f"coefficient of {term} exceeds 64-bit range")
        if c:
            self._terms[term] = c
        else:
            self._terms.pop(term, None)

    def items(self) -> list[tuple[RefinedTerm, int]]:
        return sorted(self._terms.items(), key=lambda tc: tc[0].sort_key())

    def __iter__(self) -> Iterator[tuple[RefinedTerm, int]]:
        return iter(self.items())

    def terms(self) -> list[RefinedTerm]:
        return [t for t, _ in self.items()]

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __getitem__(self, term: RefinedTerm | str) -> int:
        if isinstance(term, str):
            term = RefinedTerm.parse(term)
        return self._terms.get(term, 0)

    def __contains__(self, term) -> bool:
        return self[term] != 0

    def total(self) -> int:
        """Sum of all coefficients."""
        return sum(self._terms.values())

    def weights(self) -> set[int]:
        return {t.weight for t in self._terms}

    def as_dict(self) -> dict[RefinedTerm, int]:
        return dict(self._terms)

    def copy(self) -> "Combination":
        return Combination(self._terms, self.pairing)

    def __add__(self, other: "Combination") -> "Combination":
        out = self.copy()
        for t, c in other._terms.items():
            out.add(t, c)
        if out.pairing is None:
            out.pairing = other.pairing
        return out

    def __neg__(self) -> "Combination":
        return Combination({t: -c for t, c in self._terms.items()}, self.pairing)

    def __sub__(self, other: "Combination") -> "Combination":
        return self + (-other)

    def __mul__(self, scalar: int) -> "Combination":
        if not isinstance(scalar, int):
            return NotImplemented
        return Combination({t: scalar * c for t, c in self._terms.items()}, self.pairing)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, Combination):
            return self._terms == other._terms
        return NotImplemented

    def __repr__(self) -> str:
        body = " + ".join(f"{c}*[{t}]" for t, c in self.items())
        return f"Combination({body or '0'})"
