"""
Foundation sets: finite sets F such that every principal right ideal meets
``fS`` for some ``f`` in F.

Families with a decidable criterion answer ``is_foundation`` exactly; any
other family gets a bounded search and a ``verified-to-bound`` verdict.

>>> from rightlcm.families import NxP
>>> S = NxP([2])
>>> F = FoundationSet.of(S, ["(0,2)", "(1,2)"])
>>> is_foundation(F), is_accurate(F), is_proper(F)
(<Verdict.TRUE: 'true'>, True, True)
>>> foundation_witness(FoundationSet.of(S, ["(0,2)"]), 2)
nxp<(1,2)>
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product as _cartesian

from ..core import (
    Element,
    FamilyMismatchError,
    RightLCMFamily,
    Verdict,
    divides,
    multiply,
    right_lcm,
)


class BoundExceededError(RuntimeError):
    """A bounded search ran out of candidates."""


@dataclass(frozen=True)
class FoundationSet:
    family: RightLCMFamily
    elements: tuple[Element, ...]

    def __post_init__(self):
        seen = []
        for s in self.elements:
            if s.family != self.family:
                raise FamilyMismatchError(self.family, s.family)
            if s not in seen:
                seen.append(s)
        object.__setattr__(self, "elements", tuple(seen))

    @classmethod
    def of(cls, family: RightLCMFamily, items) -> FoundationSet:
        els = [family.parse(x) if isinstance(x, str) else x for x in items]
        return cls(family, tuple(els))

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def key(self):
        return frozenset(self.elements)

    def to_json(self) -> dict:
        return {"family": self.family.to_json(), "elements": [str(s) for s in self.elements]}

    @classmethod
    def from_json(cls, data: dict) -> FoundationSet:
        from ..families import family_from_json

        fam = family_from_json(data["family"])
        return cls.of(fam, data["elements"])

    def __repr__(self):
        return "{" + ", ".join(str(s) for s in self.elements) + "}"


def _elements(F) -> list[Element]:
    return list(F.elements) if isinstance(F, FoundationSet) else list(F)


def _family(F) -> RightLCMFamily:
    els = _elements(F)
    if isinstance(F, FoundationSet):
        return F.family
    fam = els[0].family
    for s in els:
        if s.family != fam:
            raise FamilyMismatchError(fam, s.family)
    return fam


def foundation_witness(F, bound: int) -> Element | None:
    """First ``t`` with ``length(t) <= bound`` whose ideal misses every ``fS``."""
    els = _elements(F)
    for t in _family(F).enumerate(bound):
        if all(right_lcm(f, t).is_disjoint for f in els):
            return t
    return None


def is_foundation(F, bound: int = 3) -> Verdict:
    els = _elements(F)
    if not els:
        return Verdict.FALSE
    exact = _family(F).foundation_exact(els)
    if exact is not None:
        return Verdict.of(exact)
    return Verdict.FALSE if foundation_witness(F, bound) is not None else Verdict.BOUNDED


def is_accurate(F) -> bool:
    els = _elements(F)
    return all(
        right_lcm(a, b).is_disjoint for i, a in enumerate(els) for b in els[i + 1 :]
    )


def is_accurate_indexed(family_of_elements: list[Element]) -> bool:
    """Accuracy of an indexed family: repeated entries count as overlapping."""
    els = list(family_of_elements)
    return all(
        a != b and right_lcm(a, b).is_disjoint for i, a in enumerate(els) for b in els[i + 1 :]
    )


def is_proper(F) -> bool:
    els = _elements(F)
    return bool(els) and all(s.family.is_core_irreducible(s) for s in els)


def product_sets(F1, F2) -> FoundationSet:
    """``F1 · F2``: pairwise products, duplicates removed, ``F1`` outermost."""
    fam = _family(F1)
    if _family(F2) != fam:
        raise FamilyMismatchError(fam, _family(F2))
    return FoundationSet(fam, tuple(multiply(s, t) for s in _elements(F1) for t in _elements(F2)))


def is_refinement(Fp, F) -> bool:
    """Every member of ``Fp`` lies in ``fS`` for some ``f`` in ``F``."""
    return all(any(divides(f, g) for f in _elements(F)) for g in _elements(Fp))


def accurate_refine(F, bound: int = 3) -> FoundationSet:
    """An accurate foundation set refining ``F``.

    Uses the family strategy when there is one, otherwise searches subsets of
    ``F·enumerate(bound)`` ordered by size, total length and text.
    """
    fam = _family(F)
    els = _elements(F)
    out = fam.accurate_refinement(els)
    if out is not None:
        return FoundationSet(fam, tuple(out))
    if not is_foundation(F, bound):
        raise ValueError(f"{F!r} is not a foundation set")
    candidates = sorted(
        {multiply(f, r) for f in els for r in fam.enumerate(bound)},
        key=lambda s: (fam.length(s), str(s)),
    )
    for size in range(1, min(len(candidates), 6) + 1):
        for idx in _combinations(len(candidates), size):
            G = [candidates[i] for i in idx]
            if is_accurate(G) and is_foundation(G, bound):
                return FoundationSet(fam, tuple(G))
    raise BoundExceededError(f"no accurate refinement of {F!r} within bound {bound}")


def _combinations(n, k):
    from itertools import combinations

    return combinations(range(n), k)


def check_product_accuracy(F1, F2) -> bool:
    """Does ``F1·F2`` being an accurate foundation set match both factors being so?

    The product is read as the family indexed by pairs ``(s, t)``: two pairs
    giving the same element make it inaccurate.
    """
    fam = _family(F1)
    pairs = [multiply(s, t) for s in _elements(F1) for t in _elements(F2)]
    lhs = bool(is_foundation(FoundationSet(fam, tuple(pairs)))) and is_accurate_indexed(pairs)
    rhs = all(bool(is_foundation(F)) and is_accurate(F) for F in (F1, F2))
    return lhs == rhs


def check_core_translates(s: Element, F) -> bool:
    """For core ``s`` and an accurate foundation set ``F``, ``s·F`` and ``F·s`` are too."""
    fam = _family(F)
    for G in (product_sets([s], F), product_sets(F, [s])):
        if len(G) != len(_elements(F)) or not (is_foundation(G) and is_accurate(G)):
            return False
    return True


# ---------------------------------------------------------------------------
# seeded pools


def _small_core(fam: RightLCMFamily, bound: int = 2) -> list[Element]:
    return fam.core_samples(bound)


def generate_pool(family: RightLCMFamily, seed: int = 0, size: int = 24) -> list[FoundationSet]:
    """A reproducible mix of accurate and non-accurate foundation sets.

    Sources: the family's elementary sets and their pairwise products, core
    singletons, core translates ``c·F`` and ``F·c``, accurate refinements, and
    perturbations that add an extra member to an existing set.
    """
    rng = random.Random(seed)
    pool: dict[frozenset, FoundationSet] = {}

    def add(els):
        F = FoundationSet(family, tuple(els))
        if F.key() not in pool and is_foundation(F) is Verdict.TRUE:
            pool[F.key()] = F

    atoms = [list(a) for a in family.proper_atoms()]
    core = _small_core(family)
    for a in atoms:
        add(a)
    for a, b in _cartesian(atoms, repeat=2):
        add(list(product_sets(a, b)))
    for c in core[:6]:
        add([c])
    small_elements = [s for s in family.enumerate(2)]
    attempts = 0
    while len(pool) < size and attempts < 20 * size:
        attempts += 1
        base = rng.choice(list(pool.values()))
        move = rng.randrange(5)
        if move == 0 and core:
            c = rng.choice(core)
            add(list(product_sets([c], base)))
        elif move == 1 and core:
            c = rng.choice(core)
            add(list(product_sets(base, [c])))
        elif move == 2:
            add(list(base) + [rng.choice(small_elements)])
        elif move == 3:
            add(list(accurate_refine(base)))
        else:
            other = rng.choice(list(pool.values()))
            if len(base) * len(other) <= 36:
                add(list(product_sets(base, other)))
    return sorted(pool.values(), key=lambda F: (len(F), [str(s) for s in F]))
