"""
Finitely generated abelian groups in invariant-factor form, and the K-group
formulas for boundary quotients of BS(c,d)⁺ and ℕ⋊P.

``ℤ/0`` is treated as ``ℤ`` and contributes to the free rank; ``ℤ/1`` is
trivial and disappears.

>>> print(k_boundary_bs(2, 3))
K0 = Z/2, K1 = 0
>>> print(kunneth(k_cuntz(3), k_cuntz(5)))
K0 = Z/2, K1 = Z/2
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import reduce
from math import gcd

from .intlat import snf


@dataclass(frozen=True)
class FGAbGroup:
    rank: int = 0
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        if self.rank < 0:
            raise ValueError("rank must be nonnegative")
        object.__setattr__(self, "torsion", _invariant_factors(self.torsion))

    @classmethod
    def cyclic(cls, n: int) -> FGAbGroup:
        """``ℤ/n`` with ``ℤ/0 = ℤ``."""
        n = abs(n)
        return cls(1) if n == 0 else cls(0, (n,))

    @classmethod
    def free(cls, r: int) -> FGAbGroup:
        return cls(r)

    def summands(self) -> list[int]:
        """Cyclic orders with 0 standing for ``ℤ``."""
        return [0] * self.rank + list(self.torsion)

    def __add__(self, other: FGAbGroup) -> FGAbGroup:
        return FGAbGroup(self.rank + other.rank, self.torsion + other.torsion)

    @property
    def is_trivial(self) -> bool:
        return self.rank == 0 and not self.torsion

    @property
    def order(self) -> int | None:
        if self.rank:
            return None
        out = 1
        for d in self.torsion:
            out *= d
        return out

    def __str__(self):
        parts = []
        if self.rank == 1:
            parts.append("Z")
        elif self.rank > 1:
            parts.append(f"Z^{self.rank}")
        parts += [f"Z/{d}" for d in self.torsion]
        return " ⊕ ".join(parts) if parts else "0"

    def to_json(self) -> dict:
        return {"rank": self.rank, "torsion": list(self.torsion)}

    @classmethod
    def from_json(cls, data: dict) -> FGAbGroup:
        return cls(int(data["rank"]), tuple(data["torsion"]))


def _invariant_factors(orders) -> tuple[int, ...]:
    """Invariant factors of ``⊕ ℤ/n_i`` for finite orders ``n_i >= 1``."""
    orders = [abs(int(n)) for n in orders]
    if any(n == 0 for n in orders):
        raise ValueError("ℤ/0 belongs in the rank, not the torsion")
    orders = [n for n in orders if n > 1]
    if not orders:
        return ()
    # primary decomposition, then recombine largest prime powers
    powers: dict[int, list[int]] = {}
    for n in orders:
        for p, e in _factorize(n).items():
            powers.setdefault(p, []).append(p**e)
    width = max(len(v) for v in powers.values())
    factors = [1] * width
    for p, vals in powers.items():
        vals.sort()
        for i, q in enumerate(vals):
            factors[width - len(vals) + i] *= q
    return tuple(f for f in factors if f > 1)


def _factorize(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def normalize_presentation(relations, generators: int | None = None) -> FGAbGroup:
    """Cokernel of ``ℤ^k → ℤ^n`` given by the rows of ``relations`` (each a relation)."""
    rows = [list(r) for r in relations]
    n = generators if generators is not None else (len(rows[0]) if rows else 0)
    if not rows:
        return FGAbGroup(n)
    if any(len(r) != n for r in rows):
        raise ValueError("relation rows must all have one entry per generator")
    diag = snf(rows).diagonal
    torsion = [d for d in diag if d > 1]
    rank = n - sum(1 for d in diag if d != 0)
    return FGAbGroup(rank, tuple(torsion))


def direct_sum(*groups: FGAbGroup) -> FGAbGroup:
    return reduce(lambda a, b: a + b, groups, FGAbGroup())


def _tensor_cyclic(m: int, n: int) -> int:
    # with 0 for ℤ: ℤ⊗ℤ = ℤ, ℤ⊗ℤ/n = ℤ/n, ℤ/m⊗ℤ/n = ℤ/gcd
    return gcd(m, n)


def tensor(G: FGAbGroup, H: FGAbGroup) -> FGAbGroup:
    return direct_sum(
        *(FGAbGroup.cyclic(_tensor_cyclic(a, b)) for a in G.summands() for b in H.summands())
    )


def tor(G: FGAbGroup, H: FGAbGroup) -> FGAbGroup:
    out = []
    for a in G.summands():
        for b in H.summands():
            if a and b:
                out.append(FGAbGroup.cyclic(gcd(a, b)))
    return direct_sum(*out)


@dataclass(frozen=True)
class KPair:
    k0: FGAbGroup
    k1: FGAbGroup
    status: str = "theorem"
    notes: tuple[str, ...] = field(default=(), compare=False)

    def __str__(self):
        return f"K0 = {self.k0}, K1 = {self.k1}"

    def groups(self):
        return (self.k0, self.k1)

    def to_json(self) -> dict:
        return {"K0": self.k0.to_json(), "K1": self.k1.to_json()}


def kunneth(A: KPair, B: KPair) -> KPair:
    """Graded Künneth formula with the Tor term shifted by one degree."""
    a0, a1 = A.k0, A.k1
    b0, b1 = B.k0, B.k1
    k0 = direct_sum(tensor(a0, b0), tensor(a1, b1), tor(a0, b1), tor(a1, b0))
    k1 = direct_sum(tensor(a0, b1), tensor(a1, b0), tor(a0, b0), tor(a1, b1))
    status = "theorem" if A.status == B.status == "theorem" else "conjectural"
    return KPair(k0, k1, status)


def k_cuntz(p: int) -> KPair:
    """K-theory of the Cuntz algebra on ``p`` generators: ``(ℤ/(p−1), 0)``."""
    if p < 2:
        raise ValueError("Cuntz algebras need p >= 2")
    return KPair(FGAbGroup.cyclic(p - 1), FGAbGroup())


UNIT = KPair(FGAbGroup(1), FGAbGroup())


def _check_family(P) -> list[int]:
    P = [int(p) for p in P]
    if not P:
        raise ValueError("need at least one generator")
    for i, p in enumerate(P):
        if p < 2:
            raise ValueError(f"generator {p} must be >= 2")
        for q in P[:i]:
            if gcd(p, q) != 1:
                raise ValueError(f"generators {q} and {p} are not coprime")
    return P


def g_P(P) -> int:
    """``gcd{p − 1 : p ∈ P}``."""
    return reduce(gcd, (p - 1 for p in _check_family(P)))


def k_torsion_subalgebra(P) -> KPair:
    """K-theory of the tensor product of Cuntz algebras ``⊗_{p∈P} O_p``.

    This is a theorem for at most two generators and conjectural beyond.
    """
    P = _check_family(P)
    out = UNIT
    for p in P:
        out = kunneth(out, k_cuntz(p))
    status = "theorem" if len(P) <= 2 else "conjectural"
    notes = ("the torsion subalgebra is identified with ⊗_{p∈P} O_p",)
    return KPair(out.k0, out.k1, status, notes)


def k_boundary_nxp(P) -> KPair:
    """``K_i = ℤ^{2^{|P|−1}} ⊕ K_i(torsion subalgebra)`` in both degrees."""
    P = _check_family(P)
    tors = k_torsion_subalgebra(P)
    free = FGAbGroup(2 ** (len(P) - 1))
    return KPair(free + tors.k0, free + tors.k1, tors.status, tors.notes)


def k_boundary_bs(c: int, d: int) -> KPair:
    """``K0 = ℤ/(d−1) ⊕ δ_{1c}ℤ`` and ``K1 = δ_{1d}ℤ ⊕ ℤ/(c−1)``, with ``ℤ/0 = ℤ``."""
    if c < 1 or d < 1:
        raise ValueError("BS(c,d) needs c, d >= 1")
    k0 = FGAbGroup.cyclic(d - 1) + FGAbGroup(1 if c == 1 else 0)
    k1 = FGAbGroup(1 if d == 1 else 0) + FGAbGroup.cyclic(c - 1)
    return KPair(k0, k1)


def orders_divide(G: FGAbGroup, m: int) -> bool:
    """Every element of ``G`` has order dividing ``m``."""
    if m < 1:
        raise ValueError("m must be >= 1")
    return G.rank == 0 and all(m % d == 0 for d in G.torsion)
