"""Catalog of shuffle-derived identities and their renderings.

Every identity pairs a direct lattice sum (from :mod:`mdzv.oracle`) with the
refined-term combination the shuffle engine produces for it.  Names are
stable strings used by the CLI:

``selfie-zeta<n>``
    ``zeta_K(n) = sum 1/N(a)^n`` as a self-shuffle of two ``n``-chains.
``selfie-mdzv-11``, ``selfie-mdzv-121``
    the two-variable sums ``zeta^(1)(1)(1,2)`` and ``zeta^(12)(1)(1,2)``.
``corollary``
    their difference.
``pair-<xy>-x-<uv>``
    product of the depth-one sums ``zeta^(1)(x,y)`` and ``zeta^(1)(u,v)``.
``zeta<n1>-x-zeta<n2>``
    full product ``zeta_K(n1) zeta_K(n2)``.
``coset:<rho>:<h>:<e1,...,e4>``
    ``zeta^(h*rho)`` summed directly against ``zeta^rho`` from the engine.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass
from functools import lru_cache
from math import comb

from . import oracle
from .errors import UnknownIdentity
from .permutation import Permutation
from .symmetry import DEPTH1, INTERLEAVED, STANDARD, PairingStructure, canonicalize_combination
from .terms import Combination, RefinedTerm
from .words import collect, expand_product, letter_shuffle, shuffle_chains, shuffle_product, term_from_word

MDZV_VARIANTS = {
    # labels: 1 = a, 2 = b, 3 = conj(a), 4 = conj(b)
    "(1)(1)": ((1, 2, None), (3, 4, None)),
    "(12)(1)": ((2, 1, None), (3, 4, None)),
}
PAIR_FACTORS = ("22", "13", "33", "24", "15")


def _single_chain(label: int, n: int) -> tuple:
    return (label,) + (None,) * (n - 1)


@lru_cache(maxsize=None)
def _self_shuffle(n: int, simplify: bool) -> Combination:
    if n < 1:
        raise ValueError("n must be positive")
    words = shuffle_chains(_single_chain(1, n), _single_chain(2, n))
    return collect((term_from_word(w) for w in words), DEPTH1, simplify)


def self_shuffle_zeta(n: int, simplify: bool = True) -> Combination:
    """``zeta_K(n)`` as refined terms: ``sum 1/(a^n conj(a)^n)`` shuffled."""
    return _self_shuffle(n, simplify).copy()


def mzv_self_shuffle(n: int) -> Combination:
    """Exponent multiplicities of the classical shuffle ``(g -^(n-1)) x (g -^(n-1))``.

    Works on unlabeled letters, so it shares nothing with the chain engine.
    """
    word = ("g",) + ("-",) * (n - 1)
    out = Combination(pairing=DEPTH1)
    for w in letter_shuffle(word, word):
        cuts = [i for i, x in enumerate(w) if x == "g"] + [len(w)]
        exps = tuple(cuts[i + 1] - cuts[i] for i in range(2))
        out.add(RefinedTerm(Permutation.identity(2), exps), 1)
    return out


@lru_cache(maxsize=None)
def _mdzv(variant: str, simplify: bool) -> Combination:
    try:
        a, b = MDZV_VARIANTS[variant]
    except KeyError:
        raise ValueError(f"variant must be one of {sorted(MDZV_VARIANTS)}") from None
    return collect((term_from_word(w) for w in shuffle_chains(a, b)), INTERLEAVED, simplify)


def self_shuffle_mdzv(variant: str = "(1)(1)", simplify: bool = True) -> Combination:
    return _mdzv(variant, simplify).copy()


def corollary_difference() -> Combination:
    """``zeta^(1)(1)(1,2) - zeta^(12)(1)(1,2)`` after simplification."""
    return self_shuffle_mdzv("(1)(1)") - self_shuffle_mdzv("(12)(1)")


def depth_one(exps: str | tuple[int, int]) -> RefinedTerm:
    if isinstance(exps, str):
        exps = tuple(int(c) for c in exps)
    return RefinedTerm(Permutation.identity(2), tuple(exps))


def pair_product(left, right, simplify: bool = True) -> Combination:
    """Product of two depth-one sums ``zeta^(1)(left) * zeta^(1)(right)``."""
    return shuffle_product(depth_one(left), depth_one(right), STANDARD, simplify)


@lru_cache(maxsize=None)
def _product(n1: int, n2: int, simplify: bool) -> Combination:
    return expand_product(self_shuffle_zeta(n1), self_shuffle_zeta(n2), STANDARD, simplify)


def product_zeta(n1: int, n2: int, simplify: bool = True) -> Combination:
    """``zeta_K(n1) zeta_K(n2)`` expanded through both self-shuffles."""
    return _product(n1, n2, simplify).copy()


def product_total(n1: int, n2: int) -> int:
    """Expected coefficient sum of :func:`product_zeta`."""
    return comb(2 * n1, n1) * comb(2 * n2, n2) * comb(2 * n1 + 2 * n2, 2 * n1)


# -- registry ---------------------------------------------------------------

@dataclass
class NamedIdentity:
    name: str
    lhs: object
    rhs: Combination
    description: str = ""


_SELFIE = re.compile(r"selfie-zeta([0-9]+)$")
_PAIR = re.compile(r"pair-([0-9]{2})-x-([0-9]{2})$")
_FULL = re.compile(r"zeta([0-9]+)-x-zeta([0-9]+)$")


def identity_names() -> list[str]:
    pairs = [f"pair-{a}-x-{b}" for a in ("22", "13") for b in ("22", "13")
             if (a, b) != ("13", "22")]
    pairs += [f"pair-{a}-x-{b}" for a in ("22", "13") for b in ("33", "24", "15")]
    return (["selfie-zeta2", "selfie-zeta3", "selfie-mdzv-11", "selfie-mdzv-121", "corollary"]
            + pairs + ["zeta2-x-zeta2", "zeta2-x-zeta3"])


def get_identity(name: str) -> NamedIdentity:
    m = _SELFIE.match(name)
    if m:
        n = int(m.group(1))
        return NamedIdentity(name, oracle.DedekindZeta(n), self_shuffle_zeta(n),
                             f"zeta_K({n}) as a self-shuffle")
    if name == "selfie-mdzv-11":
        return NamedIdentity(name, oracle.TwoVariableMDZV(False), self_shuffle_mdzv("(1)(1)"),
                             "sum 1/(N(a) N(a+b)^2)")
    if name == "selfie-mdzv-121":
        return NamedIdentity(name, oracle.TwoVariableMDZV(True), self_shuffle_mdzv("(12)(1)"),
                             "sum 1/(conj(a) b N(a+b)^2)")
    if name == "corollary":
        lhs = oracle.Difference(oracle.TwoVariableMDZV(False), oracle.TwoVariableMDZV(True))
        return NamedIdentity(name, lhs, corollary_difference(),
                             "difference of the two two-variable sums")
    m = _PAIR.match(name)
    if m:
        a, b = depth_one(m.group(1)), depth_one(m.group(2))
        if any(e < 1 for e in a.exponents + b.exponents):
            raise UnknownIdentity(f"unknown identity {name!r}")
        lhs = oracle.Product(oracle.DepthOneSum(a), oracle.DepthOneSum(b))
        return NamedIdentity(name, lhs, shuffle_product(a, b, STANDARD),
                             f"zeta^(1)({a.exponents}) * zeta^(1)({b.exponents})")
    m = _FULL.match(name)
    if m:
        n1, n2 = int(m.group(1)), int(m.group(2))
        if n1 < 1 or n2 < 1:
            raise UnknownIdentity(f"unknown identity {name!r}")
        lhs = oracle.Product(oracle.DedekindZeta(n1), oracle.DedekindZeta(n2))
        return NamedIdentity(name, lhs, product_zeta(n1, n2), f"zeta_K({n1}) zeta_K({n2})")
    if name.startswith("coset:"):
        try:
            _, rho, h, exps = name.split(":")
            exps_t = tuple(int(x) for x in exps.split(","))
            r = Permutation.parse(rho, 4)
            hp = Permutation.parse(h, 4)
            moved = RefinedTerm(hp * r, exps_t)
            base = RefinedTerm(r, exps_t)
        except ValueError as exc:
            raise UnknownIdentity(f"bad coset identity {name!r}: {exc}") from None
        return NamedIdentity(name, oracle.PairSum(moved), Combination({base: 1}, STANDARD),
                             "relabeling invariance of one refined term")
    raise UnknownIdentity(f"unknown identity {name!r}; known: {', '.join(identity_names())}")


# -- rendering ----------------------------------------------------------------

def _coeff_prefix(c: int, first: bool) -> str:
    sign = "-" if c < 0 else ("" if first else "+")
    mag = abs(c)
    return sign + ("" if mag == 1 else str(mag))


def to_latex(comb_: Combination, semicolon: bool = False) -> str:
    """``2\\zeta^{(1)}(2,2)+4\\zeta^{(1)}(1,3)``; ``semicolon`` splits k=4 exponents as ``a,b;c,d``."""
    parts = []
    for i, (t, c) in enumerate(comb_.items()):
        exps = [str(e) for e in t.exponents]
        if semicolon and t.k == 4:
            args = ",".join(exps[:2]) + ";" + ",".join(exps[2:])
        else:
            args = ",".join(exps)
        parts.append(f"{_coeff_prefix(c, i == 0)}\\zeta^{{{t.perm}}}({args})")
    return "".join(parts) or "0"


def to_text(comb_: Combination) -> str:
    out = ""
    for i, (t, c) in enumerate(comb_.items()):
        body = f"zeta^{t.perm}({','.join(map(str, t.exponents))})"
        item = body if abs(c) == 1 else f"{abs(c)}*{body}"
        if i == 0:
            out = ("-" if c < 0 else "") + item
        else:
            out += (" - " if c < 0 else " + ") + item
    return out or "0"


def to_json(comb_: Combination, k: int | None = None, pairing: PairingStructure | None = None) -> str:
    terms = comb_.items()
    if k is None:
        k = terms[0][0].k if terms else (comb_.pairing.k if comb_.pairing else 0)
    pairing = pairing or comb_.pairing
    doc = {
        "k": k,
        "pairing": [list(p) for p in pairing.pairs] if pairing else [],
        "terms": [{"perm": str(t.perm), "exponents": list(t.exponents), "coeff": c}
                  for t, c in terms],
    }
    return json.dumps(doc, separators=(",", ":"))


def from_json(text: str) -> Combination:
    doc = json.loads(text)
    k = int(doc["k"])
    pairing = PairingStructure(tuple(tuple(p) for p in doc["pairing"])) if doc["pairing"] else None
    out = Combination(pairing=pairing)
    for item in doc["terms"]:
        term = RefinedTerm.make(item["perm"], item["exponents"])
        if term.k != k:
            raise ValueError(f"term {term} does not have k={k}")
        out.add(term, int(item["coeff"]))
    return out


def render(comb_: Combination, fmt: str = "text") -> str:
    if fmt == "latex":
        return to_latex(comb_)
    if fmt == "json":
        return to_json(comb_)
    if fmt == "text":
        return to_text(comb_)
    raise ValueError(f"unknown format {fmt!r}")


def simplified(comb_: Combination, pairing: PairingStructure) -> Combination:
    return canonicalize_combination(comb_, pairing)
