"""
Comparing against transcribed formulas
======================================

The bundled reference data holds hand-derived right-hand sides verbatim.
The engine's expansions are certified numerically, so disagreements point
at the transcriptions.
"""

from mdzv.formulas import get_identity
from mdzv.printed import parse_merges, printed_for, reference_diff

for name in ("selfie-zeta3", "pair-13-x-15", "zeta2-x-zeta3"):
    entry = [e for e in printed_for(name) if e.simplified][0]
    rep = reference_diff(name, get_identity(name).rhs, entry)
    print(rep.lines()[0])

# grouping (234) with (23) hides the class split and leaves real slips
entry = [e for e in printed_for("zeta2-x-zeta3") if e.simplified][0]
rep = reference_diff("zeta2-x-zeta3", get_identity("zeta2-x-zeta3").rhs, entry,
                     parse_merges(["(234)=(23)"]))
print("\n".join(rep.lines()))
