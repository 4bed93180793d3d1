"""
zeta_K(2) zeta_K(3) over Q(sqrt(-3))
====================================

Expand the product through both self-shuffles and watch the truncated
sums of both sides grow together as the radius increases.
"""

import numpy as np

from mdzv import EvalContext, get_identity, product_zeta, to_latex
from mdzv.evaluate import eval_combination

prod = product_zeta(2, 3)
print(len(prod), prod.total())
print(to_latex(prod)[:200], "...")

ident = get_identity("zeta2-x-zeta3")
radii = np.arange(2, 11)
rows = []
for r in radii:
    ctx = EvalContext.build(-3, float(r))
    rows.append((len(ctx.truncation), ident.lhs.evaluate(ctx).real,
                 eval_combination(ident.rhs, ctx).real))
rows = np.array(rows)
print(rows)
print("max rel gap", np.max(np.abs(rows[:, 1] - rows[:, 2]) / rows[:, 1]))
