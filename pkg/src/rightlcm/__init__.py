"""
Computational toolkit for right LCM monoids: closed-form ideal arithmetic for
several concrete families, foundation sets and the core factorization, KMS
evaluators and K-group arithmetic.
"""

from .core import (
    DISJOINT,
    INCONCLUSIVE,
    CapExceededError,
    Element,
    FamilyMismatchError,
    LcmOutcome,
    ParseError,
    UnsupportedError,
    Verdict,
    divides,
    left_divide,
    lcm_oracle,
    multiply,
    right_lcm,
)
from .families import AddingMachine, BS, FreeMonoid, MatrixFamily, NxP

__version__ = "0.1.0"
