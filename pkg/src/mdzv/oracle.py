"""Direct truncated sums used as the left-hand sides of identities.

These loop over ring elements and use exact integer norms and traces
wherever the summand allows, so they share no code path with the
vectorised refined-term evaluator in :mod:`mdzv.evaluate`.
"""
from __future__ import annotations

import math

import mpmath

from .numfield import RingElement, embed
from .terms import RefinedTerm


def _fsum(ctx, values):
    values = list(values)
    if ctx.precision == "extended":
        with mpmath.workdps(ctx.dps):
            return mpmath.fsum(values) if values else mpmath.mpc(0)
    if not values:
        return 0j
    if all(isinstance(v, (int, float)) for v in values):
        return complex(math.fsum(values))
    return complex(math.fsum(v.real for v in values), math.fsum(v.imag for v in values))


def _inv(ctx, n):
    if ctx.precision == "extended":
        with mpmath.workdps(ctx.dps):
            return 1 / mpmath.mpf(n)
    return 1.0 / n


def _emb(ctx, x: RingElement):
    return embed(x, ctx.dps if ctx.precision == "extended" else None)


class DedekindZeta:
    """``sum 1/N(a)^n`` over the truncation."""

    def __init__(self, n: int):
        self.n = n

    def evaluate(self, ctx):
        return _fsum(ctx, (_inv(ctx, x.norm() ** self.n) for x in ctx.truncation))

    def __str__(self):
        return f"zeta_K({self.n})"


class DepthOneSum:
    """A ``k = 2`` refined sum ``sum 1/(a_r)^e1 (a + conj a)^e2`` with ``a + conj a = Tr(a)``."""

    def __init__(self, term: RefinedTerm):
        if term.k != 2:
            raise ValueError("depth-one sums take k=2 terms")
        self.term = term

    def evaluate(self, ctx):
        e1, e2 = self.term.exponents
        first_is_base = self.term.order[0] == 1
        vals = []
        for x in ctx.truncation:
            lead = x if first_is_base else x.conj()
            with mpmath.workdps(ctx.dps):
                vals.append(_inv(ctx, x.trace() ** e2) / _emb(ctx, lead) ** e1)
        return _fsum(ctx, vals)

    def __str__(self):
        return f"zeta^{self.term.perm}({','.join(map(str, self.term.exponents))})"


class PairSum:
    """A ``k = 4`` refined sum by nested loops; the last denominator is ``Tr(a) + Tr(c)``.

    Labels follow the standard pairing: 1, 2 are the embeddings of the first
    variable, 3, 4 those of the second.
    """

    def __init__(self, term: RefinedTerm):
        if term.k != 4:
            raise ValueError("pair sums take k=4 terms")
        self.term = term

    def evaluate(self, ctx):
        pts = list(ctx.truncation)
        emb = {x.coords(): _emb(ctx, x) for x in pts}
        order, exps = self.term.order, self.term.exponents
        vals = []
        with mpmath.workdps(ctx.dps):
            for x in pts:
                ex = emb[x.coords()]
                for y in pts:
                    ey = emb[y.coords()]
                    v = {1: ex, 2: ex.conjugate(), 3: ey, 4: ey.conjugate()}
                    s1 = v[order[0]]
                    s2 = s1 + v[order[1]]
                    s3 = s2 + v[order[2]]
                    total = x.trace() + y.trace()
                    vals.append(1 / (s1 ** exps[0] * s2 ** exps[1] * s3 ** exps[2]
                                     * total ** exps[3]))
        return _fsum(ctx, vals)

    def __str__(self):
        return f"zeta^{self.term.perm}({','.join(map(str, self.term.exponents))})"


class TwoVariableMDZV:
    """``sum_{a,b} 1/(N(a) N(a+b)^2)`` (``twisted=False``) or
    ``sum_{a,b} 1/(conj(a) b N(a+b)^2)`` (``twisted=True``)."""

    def __init__(self, twisted: bool = False):
        self.twisted = twisted

    def evaluate(self, ctx):
        pts = list(ctx.truncation)
        vals = []
        with mpmath.workdps(ctx.dps):
            for a in pts:
                for b in pts:
                    n2 = (a + b).norm() ** 2
                    if self.twisted:
                        vals.append(_inv(ctx, n2) / (_emb(ctx, a.conj()) * _emb(ctx, b)))
                    else:
                        vals.append(_inv(ctx, a.norm() * n2))
        return _fsum(ctx, vals)

    def __str__(self):
        return "zeta^(12)(1)(1,2)" if self.twisted else "zeta^(1)(1)(1,2)"


class Product:
    def __init__(self, left, right):
        self.left, self.right = left, right

    def evaluate(self, ctx):
        with mpmath.workdps(ctx.dps):
            return self.left.evaluate(ctx) * self.right.evaluate(ctx)

    def __str__(self):
        return f"{self.left} * {self.right}"


class Difference:
    def __init__(self, left, right):
        self.left, self.right = left, right

    def evaluate(self, ctx):
        with mpmath.workdps(ctx.dps):
            return self.left.evaluate(ctx) - self.right.evaluate(ctx)

    def __str__(self):
        return f"{self.left} - {self.right}"


class EngineTerm:
    """A refined term evaluated by the engine itself (used for symmetry checks)."""

    def __init__(self, term: RefinedTerm, pairing=None):
        self.term = term
        self.pairing = pairing

    def evaluate(self, ctx):
        from .evaluate import eval_term

        return eval_term(self.term, ctx, self.pairing)

    def __str__(self):
        return f"zeta^{self.term.perm}({','.join(map(str, self.term.exponents))})"
