"""
Structured statements about the square of quotients

    C*(S) → Q_p(S)
      ↓        ↓
    Q_c(S) → Q(S)

for each implemented family.  The statements are a fixed table keyed by
family kind; nothing here is computed from the monoid.  Each fact carries a
``basis`` naming the combinatorial property it rests on, which the rest of
the package can check on bounded enumerations.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..core import RightLCMFamily


@dataclass(frozen=True)
class Fact:
    statement: str
    basis: str

    def to_json(self):
        return {"statement": self.statement, "basis": self.basis}


@dataclass
class DiagramReport:
    family: str
    facts: list[Fact] = field(default_factory=list)
    relations: dict[str, list[str]] = field(default_factory=dict)

    def to_json(self):
        return {
            "family": self.family,
            "facts": [f.to_json() for f in self.facts],
            "relations": self.relations,
        }


def _nxp(fam) -> DiagramReport:
    gens = ", ".join(map(str, fam.primes))
    proper = [f"∑_{{0≤k≤{p - 1}}} v_(k,{p}) v_(k,{p})* = 1" for p in fam.primes]
    return DiagramReport(
        fam.tag,
        [
            Fact("S* = {1} and S_c = ℕ × {1}", "core elements are exactly (n,1)"),
            Fact("S = S_ci¹ ⋈ S_c", "(n,p) = (n mod p, p)(⌊n/p⌋, 1)"),
            Fact(
                "Q(S) is the quotient of Q_p(S) by v_s v_s* = 1 for s ∈ S_c",
                "every element factors as core irreducible times core",
            ),
        ],
        {
            "Q_c": ["v_(1,1) v_(1,1)* = 1"],
            "Q_p": proper,
            "Q": ["v_(1,1) v_(1,1)* = 1"] + proper,
            "generators": [f"𝒫 = {{{gens}}}"],
        },
    )


def _bs(fam) -> DiagramReport:
    if fam.d == 1:
        return _ore(fam, "BS(c,1)⁺ has no disjoint principal right ideals")
    proper = ["∑_{0≤k≤d−1} v_{b^k a} v_{b^k a}* = 1"]
    return DiagramReport(
        fam.tag,
        [
            Fact("S* = {1} and S_c = ⟨b⟩ ≅ ℕ", "ideals meet iff letter sequences are comparable"),
            Fact("S_ci¹ = ⟨F_d⟩ is free on d generators", "core irreducible iff the b-tail is 0"),
            Fact(
                "the accurate proper foundation sets are the sets (F_d)^k, k ≥ 1",
                "foundation iff every word of maximal length has a prefix in F",
            ),
            Fact("S = S_ci¹ ⋈ S_c", "normal form w_1⋯w_m b^i splits as (w_1⋯w_m)(b^i)"),
        ],
        {
            "Q_c": ["v_b v_b* = 1"],
            "Q_p": proper,
            "Q": ["v_b v_b* = 1"] + proper,
            "parameters": [f"c = {fam.c}", f"d = {fam.d}"],
        },
    )


def _matrix(fam) -> DiagramReport:
    return DiagramReport(
        fam.tag,
        [
            Fact("C*(S) = Q_c(S)", "S_c = S* = ℤ^d × {0}"),
            Fact("Q_p(S) ≅ Q(S)", "every element outside S* is core irreducible"),
            Fact(
                "Q(S) is the quotient by ∑_{g ∈ ℤ^d/Aℤ^d} v_(g,1) v_(g,1)* = 1",
                "transversals of ℤ^d/A^nℤ^d give the elementary foundation sets",
            ),
        ],
        {"Q_p": ["∑_{ḡ ∈ ℤ^d/Aℤ^d} v_(g,1) v_(g,1)* = 1"]},
    )


def _selfsimilar(fam) -> DiagramReport:
    if fam.all_core:
        return _ore(fam, "single-letter alphabet: all ideals are nested")
    q = fam.q
    facts = [
        Fact("S_c = S* = G", "ideals meet iff words are prefix-comparable"),
        Fact("C*(G) = Q(G)", "G is a group"),
        Fact("Q_c(X*) = C*(X*)", "the free monoid has trivial core"),
        Fact(f"Q_p(X*) = Q(X*) ≅ O_{q}", "{x : x ∈ X} is the minimal accurate proper foundation set"),
        Fact("S = X* ⋈ G with S_ci = (X* ∖ {ε}) ⋈ G", "word part nonempty iff core irreducible"),
    ]
    return DiagramReport(
        fam.tag,
        facts,
        {"Q_p": [f"∑_{{x ∈ X}} v_x v_x* = 1 (|X| = {q})"]},
    )


def _ore(fam, basis: str) -> DiagramReport:
    return DiagramReport(
        fam.tag,
        [
            Fact("S_c = S", basis),
            Fact("C*(S) = Q_p(S)", "no proper foundation sets"),
            Fact("Q_c(S) = Q(S) ≅ C*(G) for the enveloping group G = SS⁻¹", "right Ore"),
        ],
        {},
    )


def diagram_report(family: RightLCMFamily) -> DiagramReport:
    kind = family.kind
    if kind == "nxp":
        return _nxp(family)
    if kind == "bs":
        return _bs(family)
    if kind == "matrix":
        return _matrix(family)
    if kind in ("free", "adding", "ss"):
        return _selfsimilar(family)
    return DiagramReport(family.tag)
