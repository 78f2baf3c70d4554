"""
Homomorphisms between right LCM monoids given by images of generators, and
bounded checks of the conditions under which they pass to quotients.

The three checks are:

* ideal compatibility: ``φ(s₁)T ∩ φ(s₂)T = φ(s₁S ∩ s₂S)T``;
* core condition (a): ``φ(S_c) ⊆ T_c``;
* proper condition (b): accurate proper foundation sets go to accurate proper
  foundation sets;

and (c′), the conjunction of (a) and (b).  Every verdict is ``false`` with a
witness or ``verified-to-bound``.

>>> from rightlcm.families import FreeMonoid
>>> S, T = FreeMonoid("a"), FreeMonoid("ab")
>>> rep = hom_check(HomSpec(S, T, {"a": T.parse("a")}), 3)
>>> rep["ideal_compatibility"]["verdict"], rep["core"]["verdict"]
('verified-to-bound', 'false')
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..core import Element, RightLCMFamily, Verdict, divides, left_divide, multiply, right_lcm
from .foundation import (
    FoundationSet,
    generate_pool,
    is_accurate_indexed,
    is_foundation,
    is_proper,
)


class IllDefinedMapError(ValueError):
    """The generator images do not respect the relations of the source."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


@dataclass
class HomSpec:
    source: RightLCMFamily
    target: RightLCMFamily
    images: dict[str, Element] = field(default_factory=dict)

    def __post_init__(self):
        for name, img in self.images.items():
            if img.family != self.target:
                raise ValueError(f"image of {name} is not in {self.target.tag}")

    def _image_of(self, name: str) -> Element:
        if name in self.images:
            return self.images[name]
        if name.endswith("^-1") and name[:-3] in self.images:
            img = self.images[name[:-3]]
            inv = left_divide(img, self.target.identity)
            if inv is None:
                raise IllDefinedMapError(f"image of {name[:-3]} is not invertible")
            return inv
        raise ValueError(f"no image given for generator {name!r}")

    def __call__(self, s: Element) -> Element:
        out = self.target.identity
        for name in self.source.generator_word(s):
            out = multiply(out, self._image_of(name))
        return out

    @classmethod
    def identity(cls, family: RightLCMFamily) -> HomSpec:
        return cls(family, family, dict(family.generators()))


def _verdict(witness) -> dict:
    if witness is None:
        return {"verdict": Verdict.BOUNDED.value, "witness": None}
    return {"verdict": Verdict.FALSE.value, "witness": witness}


def check_well_defined(phi: HomSpec, bound: int):
    els = phi.source.enumerate(bound)
    for s in els:
        for t in els:
            if phi(multiply(s, t)) != multiply(phi(s), phi(t)):
                raise IllDefinedMapError(
                    f"φ({s}·{t}) differs from φ({s})·φ({t})", witness=[str(s), str(t)]
                )


def ideal_compatibility_witness(phi: HomSpec, bound: int):
    els = phi.source.enumerate(bound)
    for s1 in els:
        for s2 in els:
            src = right_lcm(s1, s2)
            img = right_lcm(phi(s1), phi(s2))
            if src.is_disjoint:
                ok = img.is_disjoint
            else:
                w = phi(src.generator)
                ok = not img.is_disjoint and divides(w, img.generator) and divides(img.generator, w)
            if not ok:
                return [str(s1), str(s2)]
    return None


def core_condition_witness(phi: HomSpec, bound: int):
    for s in phi.source.enumerate(bound):
        if phi.source.is_core(s) and not phi.target.is_core(phi(s)):
            return str(s)
    return None


def proper_condition_witness(phi: HomSpec, seed: int = 0):
    pool = [
        F
        for F in generate_pool(phi.source, seed)
        if is_proper(F) and is_accurate_indexed(list(F))
    ]
    for F in pool:
        images = [phi(s) for s in F]
        G = FoundationSet(phi.target, tuple(images))
        if not (is_accurate_indexed(images) and is_proper(G) and is_foundation(G)):
            return [str(s) for s in F]
    return None


def hom_check(phi: HomSpec, bound: int = 3, seed: int = 0) -> dict:
    check_well_defined(phi, bound)
    eq = ideal_compatibility_witness(phi, bound)
    a = core_condition_witness(phi, bound)
    b = proper_condition_witness(phi, seed)
    c = a if a is not None else b
    return {
        "source": phi.source.tag,
        "target": phi.target.tag,
        "bound": bound,
        "ideal_compatibility": _verdict(eq),
        "core": _verdict(a),
        "proper": _verdict(b),
        "core_and_proper": _verdict(c),
    }
