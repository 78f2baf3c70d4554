"""
Concrete right LCM monoids and helpers shared between them.
"""

from __future__ import annotations

from ..core import Element, RightLCMFamily, UnsupportedError, Verdict, multiply, right_lcm
from .bs import BS
from .matrix import MatrixFamily
from .nxp import NxP, crt_pair
from .selfsimilar import AddingMachine, FreeMonoid, SelfSimilarFamily

__all__ = [
    "AddingMachine",
    "BS",
    "FreeMonoid",
    "MatrixFamily",
    "NxP",
    "SelfSimilarFamily",
    "crt_pair",
    "family_from_json",
    "ore_degeneracies",
    "zs_internal",
    "zs_product",
]


def family_from_json(data: dict) -> RightLCMFamily:
    """Inverse of ``family.to_json()``."""
    kind = data.get("kind")
    if kind == "nxp":
        return NxP(data["primes"])
    if kind == "bs":
        return BS(data["c"], data["d"])
    if kind == "matrix":
        return MatrixFamily(data["A"])
    if kind == "free":
        return FreeMonoid(data["alphabet"])
    if kind == "adding":
        return AddingMachine(data.get("alphabet", "01"))
    raise ValueError(f"unknown family kind {kind!r}")


def _zs_supported(family: RightLCMFamily):
    if isinstance(family, MatrixFamily):
        raise UnsupportedError(
            "ℤ^d ⋊_A ℕ has core equal to its unit group and no complemented factorization"
        )


def zs_internal(s: Element) -> tuple[Element, Element]:
    """Split ``s`` into its core-irreducible part (or 1) and its core part."""
    _zs_supported(s.family)
    return s.family.core_factorize(s)


def zs_product(x: tuple[Element, Element], y: tuple[Element, Element]) -> tuple[Element, Element]:
    """Multiply two factorized elements inside the internal Zappa–Szép product.

    ``(a_i, a_c)(b_i, b_c) = (a_i (a_c ▷ b_i), (a_c ◁ b_i) b_c)`` where
    ``a_c b_i = (a_c ▷ b_i)(a_c ◁ b_i)`` is itself factorized.
    """
    a_i, a_c = x
    b_i, b_c = y
    mid_i, mid_c = zs_internal(a_c * b_i)
    return a_i * mid_i, mid_c * b_c


def ore_degeneracies(family: RightLCMFamily, bound: int = 3) -> dict:
    """Check left reversibility on ``enumerate(bound)`` and report the collapses.

    A right LCM monoid is right Ore exactly when no two principal right ideals
    are disjoint; then every element is core and the quotient diagram
    collapses.
    """
    elements = family.enumerate(bound)
    witness = None
    for s in elements:
        for t in elements:
            if right_lcm(s, t).is_disjoint:
                witness = (s, t)
                break
        if witness:
            break
    if witness is None:
        facts = [
            "S_c = S",
            "C*(S) = Q_p(S)",
            "Q_c(S) = Q(S) is the full group C*-algebra of the enveloping group",
        ]
        return {
            "family": family.tag,
            "right_ore": Verdict.BOUNDED.value,
            "bound": bound,
            "witness": None,
            "facts": facts,
        }
    s, t = witness
    return {
        "family": family.tag,
        "right_ore": Verdict.FALSE.value,
        "bound": bound,
        "witness": [str(s), str(t)],
        "facts": [f"{s}S ∩ {t}S = ∅"],
    }
