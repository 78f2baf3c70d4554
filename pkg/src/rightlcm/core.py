"""
Right LCM semigroups: the common interface and brute-force oracles.

A family object knows its multiplication law, normal forms and the closed-form
answers to ideal questions (right LCMs, left division, core membership).  An
``Element`` is an immutable normal-form payload tagged with its family, so
elements of different semigroups cannot be mixed by accident.

The oracle builds bounded ideals by multiplication alone and never calls a
family's closed-form LCM.  It tests divisibility with ``left_divide``, which is
itself checked against multiplication in the test suite.
"""

from __future__ import annotations

import os
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from typing import Any, Hashable, Iterable, Iterator

__all__ = [
    "CapExceededError",
    "DISJOINT",
    "Element",
    "FamilyMismatchError",
    "INCONCLUSIVE",
    "LcmOutcome",
    "ParseError",
    "RightLCMFamily",
    "UnsupportedError",
    "Verdict",
    "divides",
    "enumerate_elements",
    "left_divide",
    "lcm_oracle",
    "max_enumeration",
    "meet",
    "multiply",
    "right_lcm",
]


class FamilyMismatchError(TypeError):
    """Two elements from different semigroups were combined."""

    def __init__(self, left, right):
        super().__init__(f"family mismatch: {left} vs {right}")
        self.left, self.right = left, right


class CapExceededError(ValueError):
    """An enumeration would exceed the configured hard cap."""


class UnsupportedError(NotImplementedError):
    """The operation has no meaning (or no implementation) for this family."""


class ParseError(ValueError):
    """Malformed element text; ``position`` is the offending character index."""

    def __init__(self, message: str, text: str = "", position: int = 0):
        super().__init__(f"{message} at position {position}: {text!r}")
        self.text, self.position = text, position


DEFAULT_MAX_ENUMERATION = 250_000


def max_enumeration() -> int:
    """Hard cap on enumeration sizes; override with ``RIGHTLCM_MAX_ENUM``."""
    return int(os.environ.get("RIGHTLCM_MAX_ENUM", DEFAULT_MAX_ENUMERATION))


class Verdict(Enum):
    """Answer to a question quantified over the whole semigroup."""

    TRUE = "true"
    FALSE = "false"
    BOUNDED = "verified-to-bound"

    def __bool__(self):
        return self is not Verdict.FALSE

    @classmethod
    def of(cls, flag: bool) -> Verdict:
        return cls.TRUE if flag else cls.FALSE


@dataclass(frozen=True)
class Element:
    family: RightLCMFamily = field(compare=True, repr=False)
    payload: Hashable

    def __mul__(self, other: Element) -> Element:
        return multiply(self, other)

    def __str__(self):
        return self.family.format(self)

    def __repr__(self):
        return f"{self.family.kind}<{self.family.format(self)}>"


@dataclass(frozen=True)
class LcmOutcome:
    """``sS ∩ tS``: empty (generator None) or ``generator·S``."""

    generator: Element | None = None

    @property
    def is_disjoint(self) -> bool:
        return self.generator is None

    def __repr__(self):
        return "Disjoint" if self.generator is None else f"Meet({self.generator!r})"


DISJOINT = LcmOutcome()


def meet(w: Element) -> LcmOutcome:
    return LcmOutcome(w)


class _Inconclusive:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "Inconclusive"

    def __bool__(self):
        return False


INCONCLUSIVE = _Inconclusive()


class RightLCMFamily(ABC):
    """A concrete right LCM monoid with decidable normal forms.

    Subclasses set ``kind`` and implement the abstract methods.  ``length`` is
    the enumeration length: each level ``enumerate(n)`` is finite.
    """

    kind: str = "abstract"
    #: one of "a", "b", "c", "d" when the family carries a scaling dynamics
    kms_type: str | None = None
    has_trivial_units: bool = True

    # -- identity and hashing -------------------------------------------------

    @property
    @abstractmethod
    def tag(self) -> str:
        ...

    def _key(self) -> str:
        key = self.__dict__.get("_tag_cache")
        if key is None:
            key = self.__dict__["_tag_cache"] = self.tag
        return key

    def __eq__(self, other):
        if self is other:
            return True
        return isinstance(other, RightLCMFamily) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return self.tag

    def el(self, payload) -> Element:
        return Element(self, payload)

    @property
    def identity(self) -> Element:
        return self.el(self._identity_payload())

    @abstractmethod
    def _identity_payload(self):
        ...

    # -- semigroup structure --------------------------------------------------

    @abstractmethod
    def _mul(self, x, y):
        """Multiply two payloads."""

    @abstractmethod
    def _right_lcm(self, x, y) -> Any:
        """Payload of the canonical LCM, or None for disjoint ideals."""

    @abstractmethod
    def _left_divide(self, x, z):
        """Payload ``r`` with ``x r = z``, or None."""

    def _divides(self, x, z) -> bool:
        return self._left_divide(x, z) is not None

    @abstractmethod
    def _ideals_disjoint(self, x, y) -> bool:
        """The family's decidable criterion for ``xS ∩ yS = ∅``."""

    def canonical(self, s: Element) -> Element:
        """Canonical representative of the ideal ``sS`` (up to right units)."""
        return s

    @abstractmethod
    def length(self, s: Element) -> int:
        ...

    @abstractmethod
    def count(self, max_len: int) -> int:
        """Size of ``enumerate(max_len)`` without building it."""

    @abstractmethod
    def _enumerate(self, max_len: int) -> Iterator:
        ...

    def enumerate(self, max_len: int) -> list[Element]:
        n = self.count(max_len)
        if n > max_enumeration():
            raise CapExceededError(
                f"{self.tag}: enumerate({max_len}) has {n} elements, cap {max_enumeration()}"
            )
        return list(_enumerate_cached(self, max_len))

    # -- units and core -------------------------------------------------------

    def is_unit(self, s: Element) -> bool:
        return s.payload == self._identity_payload()

    @abstractmethod
    def is_core(self, s: Element) -> bool:
        ...

    @abstractmethod
    def is_core_irreducible(self, s: Element) -> bool:
        ...

    @abstractmethod
    def core_factorize(self, s: Element) -> tuple[Element, Element]:
        """``(f_i, f_c)`` with ``f_i`` core irreducible or 1, ``f_c`` core."""

    def core_predecessors(self, s: Element) -> list[Element]:
        """All ``t`` with ``s ∈ t(S_c \\ S*)``; generic scan, override when possible."""
        out = []
        for t in self.enumerate(self.length(s)):
            r = self._left_divide(t.payload, s.payload)
            if r is None:
                continue
            r = self.el(r)
            if self.is_core(r) and not self.is_unit(r):
                out.append(t)
        return out

    # -- text -----------------------------------------------------------------

    @abstractmethod
    def parse(self, text: str) -> Element:
        ...

    @abstractmethod
    def format(self, s: Element) -> str:
        ...

    @abstractmethod
    def to_json(self) -> dict:
        ...

    # -- generators (for homomorphisms) --------------------------------------

    def generators(self) -> dict[str, Element]:
        raise UnsupportedError(f"{self.kind} has no generator presentation")

    def generator_word(self, s: Element) -> list[str]:
        raise UnsupportedError(f"{self.kind} has no generator presentation")

    # -- boundary hooks (None means: no exact criterion) ---------------------

    def foundation_exact(self, elements: list[Element]) -> bool | None:
        return None

    def accurate_refinement(self, elements: list[Element]) -> list[Element] | None:
        return None

    def proper_atoms(self) -> list[list[Element]]:
        """Small proper accurate foundation sets used to seed pools."""
        return []

    def core_samples(self, bound: int) -> list[Element]:
        return [s for s in self.enumerate(bound) if self.is_core(s)]

    # -- scaling hooks --------------------------------------------------------

    def scale(self, s: Element) -> int:
        raise UnsupportedError(f"{self.kind} has no scaling homomorphism")

    def class_level(self, s: Element) -> int:
        raise UnsupportedError(f"{self.kind} has no scaling homomorphism")

    def class_reps(self, level: int) -> list[Element]:
        raise UnsupportedError(f"{self.kind} has no scaling homomorphism")

    def class_counts(self, level: int) -> Iterable[tuple[int, int]]:
        """``(N, multiplicity)`` pairs for the classes at one level."""
        raise UnsupportedError(f"{self.kind} has no scaling homomorphism")

    def core_exponent(self, s: Element) -> tuple[int, ...]:
        """Image of a core element in the group completion ``Z^k`` of ``S_c``."""
        raise UnsupportedError(f"{self.kind}: core is not a free abelian group")


@lru_cache(maxsize=64)
def _enumerate_cached(family: RightLCMFamily, max_len: int) -> tuple[Element, ...]:
    return tuple(family.el(p) for p in family._enumerate(max_len))


def enumerate_elements(family: RightLCMFamily, max_len: int) -> list[Element]:
    return family.enumerate(max_len)


# ---------------------------------------------------------------------------
# element-level operations


def _same_family(s: Element, t: Element) -> RightLCMFamily:
    if s.family is not t.family and s.family != t.family:
        raise FamilyMismatchError(s.family, t.family)
    return s.family


def multiply(s: Element, t: Element) -> Element:
    fam = _same_family(s, t)
    return fam.el(fam._mul(s.payload, t.payload))


def right_lcm(s: Element, t: Element) -> LcmOutcome:
    fam = _same_family(s, t)
    w = fam._right_lcm(s.payload, t.payload)
    return DISJOINT if w is None else meet(fam.canonical(fam.el(w)))


def left_divide(s: Element, x: Element) -> Element | None:
    fam = _same_family(s, x)
    r = fam._left_divide(s.payload, x.payload)
    return None if r is None else fam.el(r)


def divides(s: Element, x: Element) -> bool:
    """``x ∈ sS``."""
    return left_divide(s, x) is not None


# ---------------------------------------------------------------------------
# oracle


@lru_cache(maxsize=4096)
def _bounded_ideal(s: Element, bound: int) -> frozenset[Element]:
    fam = s.family
    return frozenset(fam.el(fam._mul(s.payload, r.payload)) for r in fam.enumerate(bound))


def bounded_ideal(s: Element, bound: int) -> frozenset[Element]:
    """``{s·r : length(r) <= bound}``."""
    return _bounded_ideal(s, bound)


def lcm_oracle(s: Element, t: Element, bound: int):
    """Brute-force right LCM from bounded ideal enumerations.

    Returns ``Meet(w)`` when one common element (up to right units) divides
    every common element found, ``DISJOINT`` when nothing common was found and
    the family's disjointness criterion agrees, and ``INCONCLUSIVE`` otherwise.
    """
    fam = _same_family(s, t)
    common = bounded_ideal(s, bound) & bounded_ideal(t, bound)
    if not common:
        return DISJOINT if fam._ideals_disjoint(s.payload, t.payload) else INCONCLUSIVE
    ordered = sorted((x.payload for x in common), key=lambda p: (fam.length(fam.el(p)), p))
    div = fam._divides
    w = next((c for c in ordered if all(div(c, x) for x in ordered)), None)
    if w is None:
        return INCONCLUSIVE
    canon = fam.canonical(fam.el(w))
    if not fam.has_trivial_units:
        # associates of w inside the window must share its canonical form
        for x in ordered:
            if div(x, w) and fam.canonical(fam.el(x)) != canon:
                return INCONCLUSIVE
    return meet(canon)
