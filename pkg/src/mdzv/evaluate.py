"""Truncated lattice sums of refined terms and identity verification.

A refined term over ``k = 2m`` generators is summed over ``m`` independent
cone variables drawn from a :class:`~mdzv.numfield.TruncationSet`; each
variable feeds its two embeddings into the labels of one conjugate pair.
Shuffle identities hold exactly on every conjugation-closed truncation, so
left and right sides can be compared at tight tolerance even at small radii.

Double precision evaluation is vectorised with numpy and reduced with
``math.fsum`` (exactly rounded, hence independent of summation order).
Extended precision uses mpmath at ``dps`` digits.
"""
from __future__ import annotations

import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable

import mpmath
import numpy as np

from .errors import SingularTerm
from .numfield import FieldSpec, RingElement, TruncationSet, embed, enumerate_cone, make_field
from .symmetry import PairingStructure, default_pairing
from .terms import Combination, RefinedTerm

SUMMATION_POLICIES = ("compensated", "ordered")
PRECISIONS = ("double", "extended")
DEFAULT_TOL = {"double": 1e-10, "extended": 1e-30}


@dataclass
class EvalContext:
    field: FieldSpec
    truncation: TruncationSet
    pairing: PairingStructure | None = None
    summation: str = "compensated"
    precision: str = "double"
    dps: int = 50
    threads: int = 1
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        if self.summation not in SUMMATION_POLICIES:
            raise ValueError(f"summation must be one of {SUMMATION_POLICIES}")
        if self.precision not in PRECISIONS:
            raise ValueError(f"precision must be one of {PRECISIONS}")
        if self.precision == "extended" and self.dps < 50:
            raise ValueError("extended precision needs at least 50 digits")

    @classmethod
    def build(cls, d: int, radius: float, include_boundary: bool = False, **kwargs) -> "EvalContext":
        fld = make_field(d)
        return cls(fld, enumerate_cone(fld, radius, include_boundary), **kwargs)

    @property
    def radius(self) -> float:
        return self.truncation.radius

    def points(self) -> list[RingElement]:
        """Truncation elements by descending absolute value, ties by coordinates."""
        if "points" not in self._cache:
            self._cache["points"] = sorted(self.truncation.elements,
                                           key=lambda x: (-x.norm(), x.a, x.b))
        return self._cache["points"]

    def pairing_for(self, k: int) -> PairingStructure:
        if self.pairing is not None and self.pairing.k == k:
            return self.pairing
        return default_pairing(k)

    def grid(self, m: int) -> list[np.ndarray]:
        """Embeddings of ``m`` independent variables over the full product grid."""
        key = ("grid", m)
        if key not in self._cache:
            vals = np.array([embed(x) for x in self.points()], dtype=complex)
            if m == 1:
                self._cache[key] = [vals]
            else:
                mesh = np.meshgrid(*([vals] * m), indexing="ij")
                self._cache[key] = [g.ravel() for g in mesh]
        return self._cache[key]

    def mp_points(self) -> list:
        key = ("mp", self.dps)
        if key not in self._cache:
            self._cache[key] = [embed(x, self.dps) for x in self.points()]
        return self._cache[key]


def ipow(x, n: int):
    """``x**n`` by repeated squaring; no logarithms, no branch cuts."""
    result = None
    base = x
    while n:
        if n & 1:
            result = base if result is None else result * base
        n >>= 1
        if n:
            base = base * base
    return result


def _reduce(values: np.ndarray, policy: str) -> complex:
    if values.size == 0:
        return 0j
    if policy == "compensated":
        return complex(math.fsum(values.real.tolist()), math.fsum(values.imag.tolist()))
    return complex(np.cumsum(values)[-1])


def _label_values(term: RefinedTerm, pairing: PairingStructure, variables: list) -> dict:
    vals = {}
    for (base, conj), v in zip(pairing.pairs, variables):
        vals[base] = v
        vals[conj] = v.conjugate() if hasattr(v, "conjugate") else mpmath.conj(v)
    return vals


def _eval_double(term: RefinedTerm, ctx: EvalContext, pairing: PairingStructure) -> complex:
    grid = ctx.grid(len(pairing.pairs))
    if grid[0].size == 0:
        return 0j
    vals = {}
    for (base, conj), v in zip(pairing.pairs, grid):
        vals[base] = v
        vals[conj] = np.conj(v)
    prefix = np.zeros_like(grid[0])
    denom = np.ones_like(grid[0])
    for label, e in zip(term.order, term.exponents):
        prefix = prefix + vals[label]
        if np.any(prefix == 0):
            raise SingularTerm(f"a denominator of {term} vanishes on the truncation set")
        denom = denom * ipow(prefix, e)
    return _reduce(1.0 / denom, ctx.summation)


def _eval_extended(term: RefinedTerm, ctx: EvalContext, pairing: PairingStructure):
    import itertools

    pts = ctx.mp_points()
    m = len(pairing.pairs)
    with mpmath.workdps(ctx.dps):
        parts = []
        for combo in itertools.product(pts, repeat=m):
            vals = _label_values(term, pairing, list(combo))
            prefix = mpmath.mpc(0)
            denom = mpmath.mpc(1)
            for label, e in zip(term.order, term.exponents):
                prefix = prefix + vals[label]
                if prefix == 0:
                    raise SingularTerm(f"a denominator of {term} vanishes on the truncation set")
                denom = denom * ipow(prefix, e)
            parts.append(1 / denom)
        if not parts:
            return mpmath.mpc(0)
        if ctx.summation == "compensated":
            return mpmath.fsum(parts)
        total = mpmath.mpc(0)
        for p in parts:
            total += p
        return total


def eval_term(term: RefinedTerm, ctx: EvalContext, pairing: PairingStructure | None = None):
    """Truncated value of one refined term."""
    pairing = pairing or ctx.pairing_for(term.k)
    if pairing.k != term.k:
        raise ValueError(f"pairing for k={pairing.k} used on a k={term.k} term")
    if ctx.precision == "extended":
        return _eval_extended(term, ctx, pairing)
    return _eval_double(term, ctx, pairing)


def eval_combination(comb: Combination, ctx: EvalContext):
    """``sum coeff * eval_term`` with a deterministic exactly-rounded reduction."""
    items = comb.items()
    pairing = comb.pairing

    def one(tc):
        t, _ = tc
        p = pairing if pairing is not None and pairing.k == t.k else None
        return eval_term(t, ctx, p)

    if ctx.threads > 1 and len(items) > 1:
        with ThreadPoolExecutor(max_workers=ctx.threads) as pool:
            values = list(pool.map(one, items))
    else:
        values = [one(tc) for tc in items]
    if ctx.precision == "extended":
        with mpmath.workdps(ctx.dps):
            if not values:
                return mpmath.mpc(0)
            return mpmath.fsum(c * v for (_, c), v in zip(items, values))
    re = [c * v.real for (_, c), v in zip(items, values)]
    im = [c * v.imag for (_, c), v in zip(items, values)]
    return complex(math.fsum(re), math.fsum(im))


def eval_product_lhs(a: RefinedTerm, b: RefinedTerm, ctx: EvalContext):
    """Product of two separately truncated depth-one sums."""
    if a.k != 2 or b.k != 2:
        raise ValueError("product left-hand sides take two k=2 terms")
    return eval_term(a, ctx) * eval_term(b, ctx)


@dataclass
class EvalReport:
    name: str
    lhs: complex
    rhs: complex
    abs_err: float
    rel_err: float
    term_count: int
    radius: float
    field: int
    tol: float
    wall_time: float

    @property
    def passed(self) -> bool:
        return self.rel_err <= self.tol

    def lines(self) -> list[str]:
        status = "PASS" if self.passed else "FAIL"
        return [
            f"identity   {self.name}",
            f"field      d={self.field}",
            f"radius     {self.radius:g}",
            f"lhs        {_fmt(self.lhs)}",
            f"rhs        {_fmt(self.rhs)}",
            f"abs_err    {self.abs_err:.3e}",
            f"rel_err    {self.rel_err:.3e}",
            f"tol        {self.tol:.1e}",
            f"terms      {self.term_count}",
            f"status     {status}",
        ]

    def __str__(self) -> str:
        return "\n".join(self.lines())


def _fmt(z) -> str:
    z = complex(z)
    return f"{z.real:.17g}{z.imag:+.3e}j"


def compare(name: str, lhs_fn: Callable[[EvalContext], object], rhs: Combination,
            ctx: EvalContext, tol: float) -> EvalReport:
    start = time.perf_counter()
    lhs = lhs_fn(ctx)
    rhs_val = eval_combination(rhs, ctx)
    if ctx.precision == "extended":
        with mpmath.workdps(ctx.dps):
            abs_err = float(abs(lhs - rhs_val))
            scale = float(max(abs(lhs), abs(rhs_val)))
    else:
        abs_err = abs(lhs - rhs_val)
        scale = max(abs(lhs), abs(rhs_val))
    rel_err = abs_err / scale if scale > 0 else 0.0
    return EvalReport(name, complex(lhs), complex(rhs_val), abs_err, rel_err, len(rhs),
                      ctx.radius, ctx.field.d, tol, time.perf_counter() - start)


def verify(identity, ctx: EvalContext, tol: float | None = None) -> EvalReport:
    """Evaluate both sides of an identity on ``ctx`` and compare.

    ``identity`` is a registered name (see :func:`mdzv.formulas.identity_names`)
    or a ``(lhs, rhs)`` pair where ``lhs`` has an ``evaluate(ctx)`` method and
    ``rhs`` is a :class:`Combination`.
    """
    if tol is None:
        tol = DEFAULT_TOL[ctx.precision]
    if isinstance(identity, str):
        from .formulas import get_identity

        ident = get_identity(identity)
        return compare(ident.name, ident.lhs.evaluate, ident.rhs, ctx, tol)
    lhs, rhs = identity
    return compare(str(lhs), lhs.evaluate, rhs, ctx, tol)
