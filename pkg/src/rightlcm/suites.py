"""
Named property suites run by ``rightlcm verify``.

Each suite returns a :class:`SuiteResult` with one :class:`CaseResult` per
family (or per parameter set).  A suite passes when every case passes.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .boundary import (
    check_complement_identity,
    check_core_translates,
    check_product_accuracy,
    check_terminating,
    core_factorize,
    generate_pool,
    is_accurate,
    search_proper_translates,
    search_unfactorizable,
)
from .core import INCONCLUSIVE, RightLCMFamily, UnsupportedError, lcm_oracle, right_lcm
from .families import AddingMachine, BS, FreeMonoid, MatrixFamily, NxP, zs_internal, zs_product
from .ktheory import g_P, k_torsion_subalgebra, orders_divide


def standard_families() -> list[RightLCMFamily]:
    """One representative for each kind of family."""
    return [
        NxP([2, 3]),
        BS(2, 3),
        MatrixFamily([[1, 1], [0, 2]]),
        FreeMonoid("ab"),
        AddingMachine("01"),
    ]


@dataclass
class CaseResult:
    name: str
    passed: bool
    checked: int = 0
    failures: list = field(default_factory=list)

    def to_json(self):
        return {
            "name": self.name,
            "passed": self.passed,
            "checked": self.checked,
            "failures": self.failures[:5],
        }


@dataclass
class SuiteResult:
    suite: str
    seed: int
    bound: int
    cases: list[CaseResult]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.cases)

    def to_json(self):
        return {
            "suite": self.suite,
            "seed": self.seed,
            "bound": self.bound,
            "passed": self.passed,
            "cases": [c.to_json() for c in self.cases],
        }


def _case(name, failures, checked) -> CaseResult:
    return CaseResult(name, not failures, checked, failures)


def product_accuracy_case(family: RightLCMFamily, seed: int) -> CaseResult:
    """Product of two foundation sets is an accurate foundation set iff both factors are."""
    pool = generate_pool(family, seed)
    failures = [
        [repr(a), repr(b)] for a in pool for b in pool if not check_product_accuracy(a, b)
    ]
    return _case(family.tag, failures, len(pool) ** 2)


def core_translates_case(family: RightLCMFamily, seed: int) -> CaseResult:
    """Core translates of accurate foundation sets are accurate foundation sets."""
    pool = [F for F in generate_pool(family, seed) if is_accurate(F)]
    core = family.core_samples(1)[:5]
    failures = [[str(c), repr(F)] for c in core for F in pool if not check_core_translates(c, F)]
    return _case(family.tag, failures, len(core) * len(pool))


def oracle_case(family: RightLCMFamily, bound: int, oracle_bound: int | None = None) -> CaseResult:
    """Closed-form right LCMs agree with brute force wherever the oracle is conclusive."""
    ob = bound + 1 if oracle_bound is None else oracle_bound
    els = family.enumerate(bound)
    failures, checked = [], 0
    for s in els:
        for t in els:
            o = lcm_oracle(s, t, ob)
            if o is INCONCLUSIVE:
                continue
            checked += 1
            if o != right_lcm(s, t):
                failures.append([str(s), str(t), repr(o), repr(right_lcm(s, t))])
    return _case(family.tag, failures, checked)


def factorization_case(family: RightLCMFamily, bound: int) -> CaseResult:
    """Every element of length at most ``bound`` factors as core irreducible (or 1) times core."""
    bad = search_unfactorizable(family, bound)
    return _case(family.tag, bad, len(family.enumerate(bound)))


def zappa_szep_case(family: RightLCMFamily, bound: int) -> CaseResult:
    """Multiplying factorized pairs inside the Zappa–Szép product reproduces ``s·t``."""
    els = family.enumerate(bound)
    failures = []
    for s in els:
        for t in els:
            a, b = zs_internal(s), zs_internal(t)
            i, c = zs_product(a, b)
            if i * c != s * t or not (family.is_core(c) and (family.is_core_irreducible(i) or i == family.identity)):
                failures.append([str(s), str(t)])
    return _case(family.tag, failures, len(els) ** 2)


def complement_case(family: RightLCMFamily, bound: int, seed: int, samples: int = 10) -> CaseResult:
    """``f_iS ∖ fS = f_i(S ∖ f_cS)`` for sampled ``f = f_i f_c``."""
    rng = random.Random(seed)
    candidates = [s for s in family.enumerate(min(bound, 3)) if not family.is_unit(s)]
    failures = []
    picks = [rng.choice(candidates) for _ in range(samples)]
    for f in picks:
        parts = core_factorize(f)
        if not check_complement_identity(parts.irreducible_part, parts.core_part, bound):
            failures.append(str(f))
    return _case(family.tag, failures, len(picks))


def search_case(family: RightLCMFamily, bound: int, seed: int) -> CaseResult:
    """No core non-unit maps an accurate proper foundation set into the core irreducibles."""
    found = search_proper_translates(family, bound, seed)
    return _case(family.tag, found, 1)


def terminating_case(family: RightLCMFamily, bound: int) -> CaseResult:
    ok = check_terminating(family, bound)
    return _case(family.tag, [] if ok else ["cycle"], 1)


def kunneth_case(seed: int, trials: int = 20) -> CaseResult:
    """Torsion-subalgebra K-groups have exponent dividing ``gcd{p − 1}``."""
    rng = random.Random(seed)
    failures = []
    for _ in range(trials):
        P = _random_generators(rng, rng.randint(1, 4))
        K = k_torsion_subalgebra(P)
        g = g_P(P)
        if not (orders_divide(K.k0, g) and orders_divide(K.k1, g)):
            failures.append(P)
    return _case("k_torsion_subalgebra", failures, trials)


def _random_generators(rng: random.Random, size: int) -> list[int]:
    from math import gcd

    out: list[int] = []
    while len(out) < size:
        p = rng.randint(2, 30)
        if all(gcd(p, q) == 1 for q in out):
            out.append(p)
    return out


def _zs_families():
    return [NxP([2]), BS(2, 3)]


def _per_family(fn, families):
    out = []
    for fam in families:
        try:
            out.append(fn(fam))
        except UnsupportedError as exc:
            out.append(CaseResult(fam.tag, True, 0, [f"skipped: {exc}"]))
    return out


SUITES = {
    "product-accuracy": lambda fams, seed, bound: _per_family(lambda F: product_accuracy_case(F, seed), fams),
    "core-translates": lambda fams, seed, bound: _per_family(lambda F: core_translates_case(F, seed), fams),
    "oracle": lambda fams, seed, bound: _per_family(lambda F: oracle_case(F, bound), fams),
    "factorization": lambda fams, seed, bound: _per_family(lambda F: factorization_case(F, bound), fams),
    "zappa-szep": lambda fams, seed, bound: _per_family(
        lambda F: zappa_szep_case(F, bound), [F for F in fams if not isinstance(F, MatrixFamily)]
    ),
    "complement": lambda fams, seed, bound: _per_family(lambda F: complement_case(F, bound, seed), fams),
    "searches": lambda fams, seed, bound: _per_family(lambda F: search_case(F, bound, seed), fams),
    "terminating": lambda fams, seed, bound: _per_family(lambda F: terminating_case(F, bound), fams),
    "kunneth": lambda fams, seed, bound: [kunneth_case(seed)],
}


# older name kept for the documented command line
ALIASES = {"lemma22": "product-accuracy"}


def run_suite(name: str, seed: int = 0, bound: int = 3, families=None) -> SuiteResult:
    name = ALIASES.get(name, name)
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    if families is None:
        families = _zs_families() if name == "zappa-szep" else standard_families()
    return SuiteResult(name, seed, bound, SUITES[name](families, seed, bound))
