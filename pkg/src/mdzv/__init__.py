"""Shuffle-product expansions of multiple Dedekind zeta values over
imaginary quadratic fields, with a lattice-sum verifier."""
from .errors import (BadDiscriminant, MalformedWord, MDZVError, MixedWeight, OverlapError,
                     SingularTerm, UnknownIdentity)
from .evaluate import EvalContext, EvalReport, eval_combination, eval_term, verify
from .formulas import (corollary_difference, from_json, get_identity, identity_names,
                       mzv_self_shuffle, pair_product, product_zeta, self_shuffle_mdzv,
                       self_shuffle_zeta, to_json, to_latex, to_text)
from .numfield import FieldSpec, RingElement, TruncationSet, enumerate_cone, make_field
from .permutation import Permutation, symmetric_group
from .symmetry import (DEPTH1, INTERLEAVED, STANDARD, PairingStructure, canonicalize,
                       coset_representatives, cosets, same_class, subgroup_H)
from .terms import Combination, RefinedTerm
from .words import (collect, enumerate_shuffles, expand_product, shuffle_chains,
                    shuffle_product, term_from_word)

__version__ = "0.1.0"
