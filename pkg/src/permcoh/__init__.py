"""Coherence for free permutative categories on plain and invertible generators.

Two parallel formal morphisms are equal exactly when, for every plain
generator, their projected underlying permutations agree and, for every
invertible generator, their projected parities agree.
"""

from .coherence import Verdict, Witness, check_equal, is_identity, verify_diagram
from .core import Letter, Registry, Word, concat, grading, signed_count
from .perm import Permutation
from .projection import omega, project_term, project_word
from .semantics import (
    Model,
    Parity,
    SuperMorphism,
    a_parity,
    a_permutation,
    eval_superz,
    interpret,
    parity,
    perm_of,
)
from .terms import (
    Beta,
    Comp,
    Eps,
    Eta,
    Id,
    Inv,
    Sum,
    Term,
    TermTypeError,
    figure_c,
    figure_eight,
    figure_h,
    render,
    src,
    tgt,
    typecheck,
)

__version__ = "0.1.0"
