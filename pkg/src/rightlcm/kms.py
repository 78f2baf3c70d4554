"""
Scaling data, ζ-functions and evaluators for KMS and ground-state formulas.

Each family with a scaling homomorphism ``N: S → ℕ^×`` (``N_s = 1`` exactly on
the core) has a partition function

    ζ_S(β) = ∑_{s̄ ∈ S/S_c} N_s^{−β}

summed over classes of ``s ~ s·c`` for core ``c``.  Traces on the core are
modelled as finitely atomic probability measures on a torus; their Fourier
coefficients are the moments ``τ(w_y w_x*)``.

>>> from rightlcm.families import BS
>>> S = BS(2, 3)
>>> round(zeta_closed(S, 2.0), 12)
1.5
>>> round(psi_series_bs(S, 3, 2.0, TraceSpec.point()).real, 12)
0.888888888889
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .core import Element, RightLCMFamily, UnsupportedError, Verdict, left_divide, right_lcm

__all__ = [
    "DivergenceError",
    "ScaleData",
    "SpanningElement",
    "TraceSpec",
    "beta_regime",
    "class_reps",
    "ground_state",
    "is_minimal",
    "minimality_report",
    "phi_bs",
    "psi_beta",
    "psi_beta_tau",
    "psi_series_bs",
    "recover_trace",
    "scale_N",
    "scale_data",
    "sweep",
    "zeta",
    "zeta_closed",
]


class DivergenceError(ValueError):
    """The series defining ζ (or a KMS evaluator) does not converge at this β."""


@dataclass(frozen=True)
class ScaleData:
    kind: str
    kappa: float
    length: str
    beta_c: float
    abscissa: float
    covered: bool
    note: str = ""

    def to_json(self):
        return {
            "type": self.kind,
            "kappa": self.kappa,
            "length": self.length,
            "beta_c": self.beta_c,
            "abscissa": self.abscissa,
            "covered": self.covered,
            "note": self.note,
        }


def scale_data(family: RightLCMFamily) -> ScaleData:
    kind = family.kms_type
    if kind == "a":
        full = False  # a finite generating family never gives all of ℕ^×
        return ScaleData(
            "a",
            math.e,
            "(m,p) ↦ log p",
            2.0,
            1.0,
            full,
            "N_(m,p) = p; β_c = 2 belongs to ℕ⋊ℕ^×, a finite family has abscissa 1 "
            "and is not covered by the uniqueness theorem",
        )
    if kind == "b":
        return ScaleData("b", float(family.det), "(g,n) ↦ n", 1.0, 1.0, True)
    if kind == "c":
        return ScaleData("c", float(family.q), "(w,g) ↦ |w|", 1.0, 1.0, True)
    if kind == "d":
        return ScaleData("d", float(family.d), "number of letters b^ℓa", 1.0, 1.0, True)
    raise UnsupportedError(f"{family.tag} has no scaling homomorphism")


def scale_N(s: Element) -> int:
    return s.family.scale(s)


def class_reps(family: RightLCMFamily, level: int) -> list[Element]:
    """One representative of each class ``sS_c`` with grading at most ``level``."""
    return family.class_reps(level)


# ---------------------------------------------------------------------------
# partition functions


def zeta(family: RightLCMFamily, beta: float, cutoff: int) -> float:
    """Partial sum of ζ over classes with grading at most ``cutoff``."""
    terms = []
    for level in range(cutoff + 1):
        for N, mult in family.class_counts(level):
            terms.append(mult * float(N) ** (-beta))
    return math.fsum(terms)


def zeta_closed(family: RightLCMFamily, beta: float) -> float:
    kind = family.kms_type
    if getattr(family, "all_core", False):
        return 1.0
    if beta <= scale_data(family).abscissa:
        raise DivergenceError(f"ζ diverges for β = {beta} ≤ 1")
    if kind == "a":
        out = 1.0
        for p in family.primes:
            out /= 1.0 - p ** (1.0 - beta)
        return out
    base = {"b": "det", "c": "q", "d": "d"}[kind]
    k = getattr(family, base)
    return 1.0 / (1.0 - k ** (1.0 - beta))


def beta_regime(family: RightLCMFamily, beta: float) -> str:
    data = scale_data(family)
    if beta > data.beta_c:
        return "above-critical"
    if beta >= 1:
        return "critical-strip"
    return "below-one"


# ---------------------------------------------------------------------------
# traces


_QUARTER = {
    Fraction(0): (Fraction(1), Fraction(0)),
    Fraction(1, 4): (Fraction(0), Fraction(1)),
    Fraction(1, 2): (Fraction(-1), Fraction(0)),
    Fraction(3, 4): (Fraction(0), Fraction(-1)),
}


def _as_fraction(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(str(x))


@dataclass(frozen=True)
class TraceSpec:
    """A finitely atomic probability measure on the ``dim``-torus, or the
    canonical trace (moments ``δ_{k,0}``).

    Angles are fractions of a full turn.  For ``dim > 1`` each angle is a
    tuple of fractions.
    """

    atoms: tuple = ()
    dim: int = 1
    canonical: bool = False

    def __post_init__(self):
        if self.canonical:
            return
        atoms = []
        for angle, weight in self.atoms:
            if self.dim == 1 and not isinstance(angle, tuple):
                angle = (_as_fraction(angle),)
            else:
                angle = tuple(_as_fraction(a) for a in angle)
            if len(angle) != self.dim:
                raise ValueError(f"angle {angle} does not have dimension {self.dim}")
            weight = _as_fraction(weight)
            if weight < 0:
                raise ValueError("weights must be nonnegative")
            atoms.append((angle, weight))
        if sum(w for _, w in atoms) != 1:
            raise ValueError("weights must sum to 1")
        object.__setattr__(self, "atoms", tuple(atoms))

    @classmethod
    def point(cls, angle=0, dim: int = 1) -> TraceSpec:
        a = tuple([_as_fraction(angle)] * dim) if not isinstance(angle, tuple) else angle
        return cls(((a, 1),), dim)

    @classmethod
    def uniform(cls, angles: Sequence, dim: int = 1) -> TraceSpec:
        w = Fraction(1, len(angles))
        return cls(tuple((a, w) for a in angles), dim)

    @classmethod
    def canonical_trace(cls, dim: int = 1) -> TraceSpec:
        return cls((), dim, True)

    def moment(self, k) -> complex:
        """``∫ e^{2πi⟨θ, k⟩} dμ(θ)``; exact for angles with denominators 1, 2, 4."""
        if isinstance(k, int):
            k = (k,)
        k = tuple(k)
        if len(k) != self.dim:
            raise ValueError(f"exponent {k} does not have dimension {self.dim}")
        if self.canonical:
            return complex(1.0 if not any(k) else 0.0)
        re_exact, im_exact = Fraction(0), Fraction(0)
        rest = []
        for angle, w in self.atoms:
            phase = sum((a * e for a, e in zip(angle, k)), Fraction(0)) % 1
            if phase in _QUARTER:
                c, s = _QUARTER[phase]
                re_exact += w * c
                im_exact += w * s
            else:
                rest.append(float(w) * cmath.exp(2j * math.pi * float(phase)))
        z = complex(float(re_exact), float(im_exact))
        return z + sum(rest, 0j)

    def to_json(self) -> dict:
        if self.canonical:
            return {"canonical": True, "dim": self.dim}
        def frac(x):
            return str(x)
        atoms = []
        for angle, w in self.atoms:
            a = frac(angle[0]) if self.dim == 1 else [frac(x) for x in angle]
            atoms.append({"angle": a, "weight": frac(w)})
        return {"atoms": atoms, "dim": self.dim}

    @classmethod
    def from_json(cls, data: dict) -> TraceSpec:
        dim = int(data.get("dim", 1))
        if data.get("canonical"):
            return cls.canonical_trace(dim)
        atoms = []
        for atom in data["atoms"]:
            a = atom["angle"]
            angle = tuple(Fraction(x) for x in a) if isinstance(a, list) else (Fraction(a),)
            atoms.append((angle, Fraction(atom["weight"])))
        return cls(tuple(atoms), dim)


# ---------------------------------------------------------------------------
# evaluators on spanning elements v_s v_t*


@dataclass(frozen=True)
class SpanningElement:
    s: Element
    t: Element

    def __post_init__(self):
        if self.s.family != self.t.family:
            from .core import FamilyMismatchError

            raise FamilyMismatchError(self.s.family, self.t.family)

    @property
    def family(self):
        return self.s.family


def _real_if_exact(z: complex):
    return z.real if z.imag == 0 else z


def psi_beta(x: SpanningElement, beta: float) -> float:
    """``δ_{s,t} N_s^{−β}``."""
    if x.s != x.t:
        return 0.0
    return float(scale_N(x.s)) ** (-beta)


def _core_moment(family: RightLCMFamily, y: Element, x: Element, tau: TraceSpec) -> complex:
    """``τ(w_y w_x*)`` for core elements ``x, y``."""
    if tau.canonical:
        try:
            diff = [a - b for a, b in zip(family.core_exponent(y), family.core_exponent(x))]
        except UnsupportedError:
            return complex(1.0 if x == y else 0.0)
        return complex(0.0 if any(diff) else 1.0)
    diff = [a - b for a, b in zip(family.core_exponent(y), family.core_exponent(x))]
    return tau.moment(tuple(diff))


def psi_beta_tau(x: SpanningElement, beta: float, tau: TraceSpec):
    """``N_s^{−β} τ(w_y w_x*)`` when ``sS ∩ tS = sxS`` with ``sx = ty`` and
    ``x, y`` core; otherwise 0."""
    fam = x.family
    lcm = right_lcm(x.s, x.t)
    if lcm.is_disjoint:
        return 0.0
    w = lcm.generator
    cx = left_divide(x.s, w)
    cy = left_divide(x.t, w)
    if not (fam.is_core(cx) and fam.is_core(cy)):
        return 0.0
    val = float(scale_N(x.s)) ** (-beta) * _core_moment(fam, cy, cx, tau)
    return _real_if_exact(val)


def ground_state(x: SpanningElement, phi: TraceSpec):
    """``χ_{S_c}(s) χ_{S_c}(t) φ(w_s w_t*)``."""
    fam = x.family
    if not (fam.is_core(x.s) and fam.is_core(x.t)):
        return 0.0
    return _real_if_exact(_core_moment(fam, x.s, x.t, phi))


# ---------------------------------------------------------------------------
# the series for v_{b^n} in BS(c,d)


def _check_bs(family, beta):
    if family.kind != "bs":
        raise UnsupportedError("the b^n series is specific to BS(c,d)")
    if family.c * family.d <= 1:
        raise UnsupportedError("the b^n series needs cd > 1")
    if beta <= 1:
        raise DivergenceError(f"the b^n series needs β > 1, got {beta}")


def phi_bs(family, n: int, beta: float, tau: TraceSpec, tol: float = 1e-12, adjoint: bool = False):
    """``ζ(β)·ψ_{β,τ}(v_{b^n})`` as the series

        ∑_{k ≥ 0} d^{k(1−β)} τ(v_{b^{n_k}}),  n_0 = n,  n_{k+1} = n_k c/d,

    where the ``k``-th term is present only while ``d`` divides ``n_0, …, n_{k−1}``.
    The sum is exact when the divisibility fails or ``n_k`` becomes stationary,
    and truncated once ``d^{k(1−β)} < tol`` otherwise.
    """
    _check_bs(family, beta)
    c, d = family.c, family.d
    r = float(d) ** (1.0 - beta)

    def mom(m):
        z = tau.moment(m)
        return z.conjugate() if adjoint else z

    total = 0j
    weight = 1.0
    m = n
    while True:
        total += weight * mom(m)
        if m % d:
            break
        nxt = m * c // d
        if nxt == m:
            # stationary: the remaining terms form a geometric series
            total += weight * r / (1.0 - r) * mom(m)
            break
        m = nxt
        weight *= r
        if weight < tol:
            break
    return _real_if_exact(total)


def psi_series_bs(family, n: int, beta: float, tau: TraceSpec, tol: float = 1e-12, adjoint: bool = False):
    """``ψ_{β,τ}(v_{b^n})`` (or ``v_{b^n}*`` with ``adjoint``) from the series."""
    return _real_if_exact(complex(phi_bs(family, n, beta, tau, tol, adjoint)) / zeta_closed(family, beta))


def recover_trace(family, phi: dict, beta: float) -> dict:
    """Invert the series: ``τ(v_{b^n}) = φ(n) − χ_{dℕ}(n) d^{1−β} φ(nc/d)``.

    ``phi`` maps ``n`` to ``ζ(β)ψ_{β,τ}(v_{b^n})`` and must be closed under
    ``n ↦ nc/d`` on multiples of ``d``.
    """
    c, d = family.c, family.d
    r = float(d) ** (1.0 - beta)
    out = {}
    for n, value in phi.items():
        if n % d == 0:
            m = n * c // d
            if m not in phi:
                raise ValueError(f"range is not closed: φ({m}) is needed for n = {n}")
            out[n] = _real_if_exact(complex(value) - r * complex(phi[m]))
        else:
            out[n] = value
    return out


# ---------------------------------------------------------------------------
# minimality


def minimality_report(family: RightLCMFamily, cap: int = 1000) -> dict:
    kind = family.kms_type
    if kind == "a":
        return {"verdict": Verdict.TRUE.value, "criterion": "⋂_p pℕ = {0}"}
    if kind == "b":
        from .intlat import charpoly, intersection_is_zero, surviving_vector

        zero = intersection_is_zero(family.A)
        rep = {
            "verdict": Verdict.of(zero).value,
            "criterion": "⋂_n A^n ℤ^d = {0}",
            "charpoly": str(charpoly(family.A)),
        }
        if not zero:
            v = surviving_vector(family.A)
            rep["surviving_vector"] = list(v) if v is not None else None
        return rep
    if kind == "c":
        gens = [g.payload[1] for g in family.generators().values() if family.is_unit(g)]
        closures = {}
        verdict = Verdict.TRUE
        for g in gens or [family.group_identity]:
            cl = family.restriction_closure(g, cap)
            if cl is None:
                verdict = Verdict.BOUNDED
                closures[family.g_format(g)] = None
            else:
                closures[family.g_format(g)] = sorted(family.g_format(h) for h in cl)
        return {"verdict": verdict.value, "criterion": "finite restriction closures", "closures": closures}
    if kind == "d":
        ok = family.c % family.d != 0
        return {"verdict": Verdict.of(ok).value, "criterion": "c ∉ dℕ"}
    raise UnsupportedError(f"{family.tag} has no scaling homomorphism")


def is_minimal(family: RightLCMFamily, cap: int = 1000) -> Verdict:
    return Verdict(minimality_report(family, cap)["verdict"])


def sweep(evaluator, betas: Sequence[float]) -> list[tuple[float, complex | float]]:
    """``[(β, evaluator(β)) for β in betas]``."""
    return [(b, evaluator(b)) for b in betas]
