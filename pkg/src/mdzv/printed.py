"""Transcribed reference formulas and term-by-term comparison with the engine.

The bundled ``data/printed.json`` holds right-hand sides copied verbatim
from the source derivations, typos included.  :func:`parse_latex` is
deliberately forgiving: anything it cannot read as a refined term of the
expected shape is kept as a malformed item instead of being dropped, so
:func:`reference_diff` can report it.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources

from .permutation import Permutation
from .symmetry import PairingStructure, canonicalize
from .terms import Combination, RefinedTerm

_TERM = re.compile(r"([+-]?)(\d*)\\zeta\^\{([^}]*)\}\(([^)]*)\)")
_LAYOUT = re.compile(r"&|\\\\|\s+")


@dataclass
class ParsedFormula:
    comb: Combination
    malformed: list[str] = field(default_factory=list)
    leftover: str = ""


def _fix_perm(text: str) -> str:
    text = text.strip()
    if not text.startswith("("):
        text = "(" + text
    if not text.endswith(")"):
        text += ")"
    return text


def parse_latex(text: str, k: int, pairing: PairingStructure | None = None) -> ParsedFormula:
    """Read ``c\\zeta^{perm}(e1,...;...)`` items from a transcribed formula.

    Bare or half-bracketed superscripts such as ``{1}`` or ``{23)}`` are
    repaired; items with the wrong number of exponents or an unreadable
    permutation go to ``malformed``.
    """
    flat = _LAYOUT.sub("", text)
    out = Combination(pairing=pairing)
    malformed = []
    for m in _TERM.finditer(flat):
        sign, coeff, perm_text, exps_text = m.groups()
        c = int(coeff) if coeff else 1
        if sign == "-":
            c = -c
        try:
            exps = tuple(int(x) for x in re.split(r"[,;]", exps_text))
            if len(exps) != k:
                raise ValueError(f"expected {k} exponents")
            perm = Permutation.parse(_fix_perm(perm_text), k)
            out.add(RefinedTerm(perm, exps), c)
        except ValueError as exc:
            malformed.append(f"{m.group(0)} ({exc})")
    leftover = _TERM.sub("", flat).strip("+-.=")
    return ParsedFormula(out, malformed, leftover)


@dataclass(frozen=True)
class PrintedEntry:
    name: str
    k: int
    pairing: PairingStructure
    simplified: bool
    latex: str

    def parse(self) -> ParsedFormula:
        return parse_latex(self.latex, self.k, self.pairing)


@lru_cache(maxsize=None)
def printed_entries() -> tuple[PrintedEntry, ...]:
    raw = json.loads(resources.files("mdzv").joinpath("data/printed.json").read_text())
    return tuple(PrintedEntry(e["name"], e["k"],
                              PairingStructure(tuple(tuple(p) for p in e["pairing"])),
                              e["simplified"], e["latex"]) for e in raw)


def printed_for(name: str) -> list[PrintedEntry]:
    return [e for e in printed_entries() if e.name == name]


@dataclass
class DiffReport:
    name: str
    simplified: bool
    mismatches: list[tuple[RefinedTerm, int, int]] = field(default_factory=list)
    only_computed: list[tuple[RefinedTerm, int]] = field(default_factory=list)
    only_printed: list[tuple[RefinedTerm, int]] = field(default_factory=list)
    malformed: list[str] = field(default_factory=list)
    aliases: dict[str, str] = field(default_factory=dict)

    @property
    def clean(self) -> bool:
        return not (self.mismatches or self.only_computed or self.only_printed or self.malformed)

    def count(self) -> int:
        return (len(self.mismatches) + len(self.only_computed) + len(self.only_printed)
                + len(self.malformed))

    def lines(self) -> list[str]:
        kind = "simplified" if self.simplified else "raw"
        out = [f"# {self.name} ({kind}): {self.count()} discrepancies"]
        for t, c, p in self.mismatches:
            out.append(f"coeff     {t}  computed={c} printed={p}")
        for t, c in self.only_computed:
            out.append(f"missing   {t}  computed={c} printed=0")
        for t, p in self.only_printed:
            out.append(f"extra     {t}  computed=0 printed={p}")
        for item in self.malformed:
            out.append(f"malformed {item}")
        for src, dst in sorted(self.aliases.items()):
            out.append(f"alias     {src} -> {dst}")
        return out


def parse_merges(specs) -> dict[Permutation, Permutation]:
    """``["(234)=(23)"]`` -> ``{(234): (23)}``, permutations of degree 4."""
    out = {}
    for spec in specs or ():
        src, sep, dst = spec.partition("=")
        if not sep:
            raise ValueError(f"merge must look like '(234)=(23)', got {spec!r}")
        out[Permutation.parse(src.strip(), 4)] = Permutation.parse(dst.strip(), 4)
    return out


def _merged(term: RefinedTerm, merges) -> RefinedTerm:
    target = merges.get(term.perm)
    return term if target is None else RefinedTerm(target, term.exponents)


def reference_diff(name: str, computed: Combination, entry: PrintedEntry,
                   merges: dict[Permutation, Permutation] | None = None) -> DiffReport:
    """Compare ``computed`` with one printed right-hand side.

    Simplified entries are compared after reducing both sides to canonical
    coset representatives; printed permutations that are not canonical are
    listed as aliases.  ``merges`` additionally identifies whole classes
    (applied after canonicalization), which isolates errors that survive a
    coarser grouping.  Raw entries are compared term by term as printed.
    """
    merges = merges or {}
    parsed = entry.parse()
    printed = parsed.comb
    report = DiffReport(name, entry.simplified, malformed=list(parsed.malformed))
    if entry.simplified:
        mine = Combination(pairing=entry.pairing)
        for t, c in computed.items():
            mine.add(_merged(canonicalize(t, entry.pairing), merges), c)
        theirs = Combination(pairing=entry.pairing)
        for t, c in printed.items():
            canon = canonicalize(t, entry.pairing)
            if canon.perm != t.perm:
                report.aliases[str(t.perm)] = str(canon.perm)
            theirs.add(_merged(canon, merges), c)
    else:
        mine, theirs = computed, printed
    a, b = mine.as_dict(), theirs.as_dict()
    for t in sorted(set(a) | set(b), key=RefinedTerm.sort_key):
        ca, cb = a.get(t, 0), b.get(t, 0)
        if ca and cb and ca != cb:
            report.mismatches.append((t, ca, cb))
        elif ca and not cb:
            report.only_computed.append((t, ca))
        elif cb and not ca:
            report.only_printed.append((t, cb))
    return report
