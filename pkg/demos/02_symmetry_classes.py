"""
Relabeling classes of refined terms
===================================

With two independent cone variables, conjugating either one or swapping
them permutes the four generator labels without changing any sum.
"""

import numpy as np

from mdzv import STANDARD, EvalContext, RefinedTerm, cosets, eval_term, same_class, subgroup_H

H = sorted(subgroup_H(STANDARD))
print([str(h) for h in H])

for c in cosets(STANDARD):
    print(min(c), sorted(str(p) for p in c))

ctx = EvalContext.build(-1, 8)
exps = (1, 3, 1, 3)

# one row per class: values of every member, should be constant along rows
for c in cosets(STANDARD):
    vals = np.array([eval_term(RefinedTerm(p, exps), ctx) for p in sorted(c)])
    print(min(c), vals.real.min(), np.ptp(vals.real))

# the action is on labels: h o rho, not rho o h
rho = min(cosets(STANDARD)[1])
# pick an h for which the two composition orders land in different classes
h = next(p for p in H if not same_class(rho, rho * p, STANDARD))
left = eval_term(RefinedTerm(h * rho, exps), ctx)
right = eval_term(RefinedTerm(rho * h, exps), ctx)
base = eval_term(RefinedTerm(rho, exps), ctx)
print(h, abs(left - base), abs(right - base))
