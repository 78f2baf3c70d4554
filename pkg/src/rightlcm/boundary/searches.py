"""
Bounded searches around the factorization ``S = S_ci¹ S_c``.

None of these can settle a statement about the whole monoid; each reports the
bound it used and any counterexample it found.
"""

from __future__ import annotations

from ..core import Element, RightLCMFamily
from .foundation import FoundationSet, generate_pool, is_accurate, is_foundation, is_proper
from .structure import core_factorize


def _proper_accurate_pool(family: RightLCMFamily, seed: int) -> list[FoundationSet]:
    return [F for F in generate_pool(family, seed) if is_proper(F) and is_accurate(F)]


def _core_nonunits(family: RightLCMFamily, bound: int) -> list[Element]:
    return [s for s in family.enumerate(bound) if family.is_core(s) and not family.is_unit(s)]


def search_proper_translates(family: RightLCMFamily, bound: int, seed: int = 0) -> list[dict]:
    """All ``(s, F)`` with ``s`` core and not a unit, ``F`` accurate and proper,
    and ``s·F`` contained in the core irreducibles."""
    findings = []
    pool = _proper_accurate_pool(family, seed)
    for s in _core_nonunits(family, bound):
        for F in pool:
            if all(family.is_core_irreducible(s * f) for f in F):
                findings.append({"s": str(s), "F": [str(f) for f in F]})
    return findings


def search_unfactorizable(family: RightLCMFamily, bound: int) -> list[str]:
    """Elements of length at most ``bound`` without a valid core factorization."""
    bad = []
    for s in family.enumerate(bound):
        if not core_factorize(s).is_valid(s):
            bad.append(str(s))
    return bad


def longest_chain(family: RightLCMFamily, bound: int) -> int | None:
    """Longest ``s → t`` chain starting at length at most ``bound``; None on a cycle.

    ``s → t`` means ``s ∈ t(S_c ∖ S*)``.  Each element has finitely many
    successors, so a chain is infinite only if the graph has a cycle.
    """
    depth: dict = {}
    on_stack: set = set()

    def visit(s) -> int | None:
        if s in depth:
            return depth[s]
        if s in on_stack:
            return None
        on_stack.add(s)
        best = 0
        for t in family.core_predecessors(s):
            if t == s:
                continue
            d = visit(t)
            if d is None:
                return None
            best = max(best, d + 1)
        on_stack.discard(s)
        depth[s] = best
        return best

    longest = 0
    for s in family.enumerate(bound):
        d = visit(s)
        if d is None:
            return None
        longest = max(longest, d)
    return longest


def check_terminating(family: RightLCMFamily, bound: int) -> bool:
    """No infinite ``→``-chain starts at an element of length at most ``bound``."""
    return longest_chain(family, bound) is not None


def check_translate_factorization(family: RightLCMFamily, bound: int, seed: int = 0) -> list[dict]:
    """Test whether ``s·F = F′·s′`` with ``F′`` accurate proper foundation and
    ``s′`` core and not a unit, for every core non-unit ``s`` of length at most
    ``bound`` and every accurate proper ``F`` in the pool.

    Core factorizations are unique up to units, so the equation can only hold
    with ``F′`` the set of irreducible parts and ``s′`` the common core part.
    Returns the pairs for which it fails.
    """
    failures = []
    for s in _core_nonunits(family, bound):
        for F in _proper_accurate_pool(family, seed):
            parts = [core_factorize(s * f) for f in F]
            cores = {p.core_part for p in parts}
            ok = False
            if len(cores) == 1:
                (c,) = cores
                Fp = [p.irreducible_part for p in parts]
                ok = (
                    not family.is_unit(c)
                    and is_proper(Fp)
                    and is_accurate(Fp)
                    and bool(is_foundation(Fp))
                )
            if not ok:
                failures.append(
                    {
                        "s": str(s),
                        "F": [str(f) for f in F],
                        "sF": [str(s * f) for f in F],
                        "core_parts": sorted(str(p.core_part) for p in parts),
                    }
                )
    return failures
