"""
Self-shuffle of zeta_K(2)
=========================

Multiply the chain integrals of 1/a^2 and 1/conj(a)^2, expand, then fold
the Galois-conjugate terms together.
"""

from mdzv import EvalContext, self_shuffle_zeta, to_latex, verify
from mdzv.words import enumerate_shuffles

# six interleavings of two 2-slot chains
for mask in enumerate_shuffles(2, 2):
    print(mask)

raw = self_shuffle_zeta(2, simplify=False)
print(to_latex(raw))
print(to_latex(self_shuffle_zeta(2)))

# the identity is exact on every conjugation-closed truncation
for radius in (2, 5, 20):
    rep = verify("selfie-zeta2", EvalContext.build(-1, radius))
    print(radius, rep.lhs.real, rep.rel_err)

# same story one weight up
print(to_latex(self_shuffle_zeta(3)))
