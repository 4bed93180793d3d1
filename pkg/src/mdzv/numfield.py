"""Imaginary quadratic rings of integers and truncated positive cones.

Elements are stored as integer coordinates ``(a, b)`` for ``a + b*w`` with
``w = sqrt(d)`` when ``d = 2, 3 (mod 4)`` and ``w = (1 + sqrt(d))/2`` when
``d = 1 (mod 4)``.  Norms, traces and the cone test are exact integer
computations; only :func:`embed` produces floating point values.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property

import mpmath

from .errors import BadDiscriminant


def _squarefree(n: int) -> bool:
    n = abs(n)
    p = 2
    while p * p <= n:
        if n % (p * p) == 0:
            return False
        p += 1
    return True


@dataclass(frozen=True)
class FieldSpec:
    d: int

    def __post_init__(self):
        if self.d >= 0 or not _squarefree(self.d):
            raise BadDiscriminant(f"d={self.d} is not a squarefree negative integer")

    @property
    def half_integral(self) -> bool:
        """True when ``w = (1 + sqrt(d))/2``."""
        return self.d % 4 == 1

    @property
    def trace_w(self) -> int:
        return 1 if self.half_integral else 0

    @property
    def norm_w(self) -> int:
        return (1 - self.d) // 4 if self.half_integral else -self.d

    @cached_property
    def omega(self) -> complex:
        root = 1j * math.sqrt(-self.d)
        return (1 + root) / 2 if self.half_integral else root

    def omega_mp(self, dps: int):
        with mpmath.workdps(dps):
            root = mpmath.mpc(0, mpmath.sqrt(-self.d))
            return (1 + root) / 2 if self.half_integral else root

    def element(self, a: int, b: int) -> "RingElement":
        return RingElement(self, a, b)

    def __str__(self) -> str:
        return f"Q(sqrt({self.d}))"


def make_field(d: int) -> FieldSpec:
    return FieldSpec(int(d))


@dataclass(frozen=True, order=False)
class RingElement:
    field: FieldSpec = field(repr=False)
    a: int
    b: int

    def __add__(self, other: "RingElement") -> "RingElement":
        return RingElement(self.field, self.a + other.a, self.b + other.b)

    def __sub__(self, other: "RingElement") -> "RingElement":
        return RingElement(self.field, self.a - other.a, self.b - other.b)

    def __neg__(self) -> "RingElement":
        return RingElement(self.field, -self.a, -self.b)

    def __mul__(self, other: "RingElement") -> "RingElement":
        # w^2 = Tr(w) w - N(w)
        t, n = self.field.trace_w, self.field.norm_w
        bb = self.b * other.b
        return RingElement(self.field,
                           self.a * other.a - n * bb,
                           self.a * other.b + self.b * other.a + t * bb)

    def conj(self) -> "RingElement":
        # conj(w) = Tr(w) - w
        return RingElement(self.field, self.a + self.b * self.field.trace_w, -self.b)

    def norm(self) -> int:
        f = self.field
        return self.a * self.a + self.a * self.b * f.trace_w + self.b * self.b * f.norm_w

    def trace(self) -> int:
        return 2 * self.a + self.b * self.field.trace_w

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def coords(self) -> tuple[int, int]:
        return (self.a, self.b)


def embed(x: RingElement, dps: int | None = None):
    """Complex value of ``x`` under the embedding with ``Im(w) > 0``.

    With ``dps`` set, returns an ``mpmath.mpc`` computed at that many digits.
    """
    if dps is None:
        return x.a + x.b * x.field.omega
    with mpmath.workdps(dps):
        return x.a + x.b * x.field.omega_mp(dps)


def in_cone(x: RingElement) -> bool:
    """``Re(x) > 0``, decided exactly (``Re(x) = trace/2``)."""
    return x.trace() > 0


def on_boundary(x: RingElement) -> bool:
    """The ray ``Re(x) = 0, Im(x) > 0``."""
    return x.trace() == 0 and x.b > 0


@dataclass(frozen=True)
class TruncationSet:
    """Cone elements with ``|x| <= radius``, ordered by norm then coordinates."""

    field: FieldSpec
    radius: float
    elements: tuple[RingElement, ...]
    include_boundary: bool = False

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def conjugates(self) -> "TruncationSet":
        return TruncationSet(self.field, self.radius,
                             tuple(sorted((x.conj() for x in self.elements), key=_order_key)),
                             self.include_boundary)

    def coordinate_set(self) -> set[tuple[int, int]]:
        return {x.coords() for x in self.elements}

    def is_conjugation_closed(self) -> bool:
        return {x.conj().coords() for x in self.elements} == self.coordinate_set()


def _order_key(x: RingElement):
    return (x.norm(), x.a, x.b)


def enumerate_cone(fld: FieldSpec, radius: float, include_boundary: bool = False) -> TruncationSet:
    """All cone elements of norm at most ``radius**2``.

    The open half-plane ``Re > 0`` is used unless ``include_boundary`` adds
    the ray ``Re = 0, Im > 0``; that ray is not conjugation-stable.
    """
    if radius <= 0:
        raise ValueError("radius must be positive")
    bound = radius * radius
    im_w = abs(fld.omega.imag)
    bmax = int(math.floor(radius / im_w)) + 1
    out = []
    for b in range(-bmax, bmax + 1):
        re_shift = b * fld.trace_w / 2
        amin = int(math.floor(-re_shift - radius)) - 1
        amax = int(math.ceil(-re_shift + radius)) + 1
        for a in range(amin, amax + 1):
            x = RingElement(fld, a, b)
            if x.is_zero() or x.norm() > bound:
                continue
            if in_cone(x) or (include_boundary and on_boundary(x)):
                out.append(x)
    out.sort(key=_order_key)
    return TruncationSet(fld, radius, tuple(out), include_boundary)
