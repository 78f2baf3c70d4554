"""
Exact integer linear algebra.

Everything here works on plain nested lists of Python ints, so entries never
overflow (powers of an expanding matrix grow exponentially).

    >>> snf([[1, 1], [0, 2]]).diagonal
    [1, 2]
    >>> solve_integer([[1, 1], [0, 2]], [1, 2])
    [0, 1]
    >>> str(charpoly([[0, 2], [1, 0]]))
    'x^2 - 2'
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import comb

__all__ = [
    "IntPoly",
    "LatticeQuotient",
    "SNFResult",
    "SingularMatrixError",
    "charpoly",
    "det",
    "has_unimodular_factor",
    "identity",
    "intersection_is_zero",
    "mat_mul",
    "mat_pow",
    "mat_vec",
    "probe_survivors",
    "snf",
    "solve_integer",
    "surviving_vector",
    "transversal",
    "unimodular_factor",
]


class SingularMatrixError(ValueError):
    pass


Matrix = list[list[int]]


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def mat_mul(A: Matrix, B: Matrix) -> Matrix:
    Bt = list(zip(*B))
    return [[sum(a * b for a, b in zip(row, col)) for col in Bt] for row in A]


def mat_vec(A: Matrix, x) -> list[int]:
    return [sum(a * b for a, b in zip(row, x)) for row in A]


def mat_pow(A: Matrix, k: int) -> Matrix:
    return [list(row) for row in _mat_pow_cached(_freeze(A), k)]


def _freeze(A) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(int(a) for a in row) for row in A)


@lru_cache(maxsize=None)
def _mat_pow_cached(A: tuple, k: int) -> tuple:
    if k == 0:
        return _freeze(identity(len(A)))
    half = _mat_pow_cached(A, k // 2)
    sq = mat_mul(half, half)
    if k % 2:
        sq = mat_mul(sq, A)
    return _freeze(sq)


def det(A: Matrix) -> int:
    """Bareiss fraction-free elimination."""
    n = len(A)
    if n == 0:
        return 1
    M = [list(row) for row in A]
    sign, prev = 1, 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k] != 0:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


# ---------------------------------------------------------------------------
# Smith normal form


@dataclass(frozen=True)
class SNFResult:
    """``A = U @ D @ V`` with ``U``, ``V`` unimodular.

    ``P = U^-1`` and ``Q = V^-1`` are kept as well, since ``P @ A @ Q = D`` is
    the form needed for solving and reducing modulo the image.
    """

    U: Matrix
    D: Matrix
    V: Matrix
    P: Matrix
    Q: Matrix

    @property
    def diagonal(self) -> list[int]:
        return [self.D[i][i] for i in range(min(len(self.D), len(self.D[0]) if self.D else 0))]

    @property
    def rank(self) -> int:
        return sum(1 for x in self.diagonal if x != 0)


def snf(A: Matrix) -> SNFResult:
    m = len(A)
    n = len(A[0]) if m else 0
    M = [list(map(int, row)) for row in A]
    P, Pinv = identity(m), identity(m)
    Q, Qinv = identity(n), identity(n)

    def swap_rows(i, j):
        if i != j:
            M[i], M[j] = M[j], M[i]
            P[i], P[j] = P[j], P[i]
            for row in Pinv:
                row[i], row[j] = row[j], row[i]

    def swap_cols(i, j):
        if i != j:
            for row in M:
                row[i], row[j] = row[j], row[i]
            for row in Q:
                row[i], row[j] = row[j], row[i]
            Qinv[i], Qinv[j] = Qinv[j], Qinv[i]

    def add_row(dst, src, q):
        # row_dst += q * row_src
        M[dst] = [a + q * b for a, b in zip(M[dst], M[src])]
        P[dst] = [a + q * b for a, b in zip(P[dst], P[src])]
        for row in Pinv:
            row[src] -= q * row[dst]

    def add_col(dst, src, q):
        # col_dst += q * col_src
        for row in M:
            row[dst] += q * row[src]
        for row in Q:
            row[dst] += q * row[src]
        Qinv[src] = [a - q * b for a, b in zip(Qinv[src], Qinv[dst])]

    def negate_row(i):
        M[i] = [-a for a in M[i]]
        P[i] = [-a for a in P[i]]
        for row in Pinv:
            row[i] = -row[i]

    for t in range(min(m, n)):
        nonzero = [(abs(M[i][j]), i, j) for i in range(t, m) for j in range(t, n) if M[i][j]]
        if not nonzero:
            break
        _, i0, j0 = min(nonzero)
        swap_rows(t, i0)
        swap_cols(t, j0)
        while True:
            for i in range(t + 1, m):
                if M[i][t]:
                    add_row(i, t, -(M[i][t] // M[t][t]))
            for j in range(t + 1, n):
                if M[t][j]:
                    add_col(j, t, -(M[t][j] // M[t][t]))
            rest = [(abs(M[i][t]), i, "r") for i in range(t + 1, m) if M[i][t]]
            rest += [(abs(M[t][j]), j, "c") for j in range(t + 1, n) if M[t][j]]
            if rest:
                _, k, kind = min(rest)
                if kind == "r":
                    swap_rows(t, k)
                else:
                    swap_cols(t, k)
                continue
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if M[i][j] % M[t][t]),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)
        if M[t][t] < 0:
            negate_row(t)

    return SNFResult(U=Pinv, D=M, V=Qinv, P=P, Q=Q)


def solve_integer(A: Matrix, b) -> list[int] | None:
    """Some integer ``x`` with ``A x = b``, or None when there is none."""
    res = snf(A)
    n = len(A[0]) if A else 0
    y = mat_vec(res.P, b)
    z = [0] * n
    for i, yi in enumerate(y):
        d = res.D[i][i] if i < n else 0
        if d == 0:
            if yi != 0:
                return None
        elif yi % d:
            return None
        else:
            z[i] = yi // d
    return mat_vec(res.Q, z)


class LatticeQuotient:
    """The finite group ``Z^d / B Z^d`` for a nonsingular square ``B``.

    ``reduce`` sends a vector to the canonical member of its coset; the set of
    canonical members is ``transversal()``.
    """

    def __init__(self, B: Matrix):
        if det(B) == 0:
            raise SingularMatrixError("lattice quotient needs a nonsingular matrix")
        self.B = [list(row) for row in B]
        self._snf = snf(self.B)
        self.invariants = self._snf.diagonal

    @property
    def order(self) -> int:
        out = 1
        for d in self.invariants:
            out *= d
        return out

    def coordinates(self, x) -> tuple[int, ...]:
        return tuple(c % d for c, d in zip(mat_vec(self._snf.P, x), self.invariants))

    def reduce(self, x) -> tuple[int, ...]:
        return tuple(mat_vec(self._snf.U, self.coordinates(x)))

    def contains(self, x) -> bool:
        return not any(self.coordinates(x))

    def solve(self, x) -> tuple[int, ...] | None:
        """The unique ``k`` with ``B k = x``, or None when ``x`` is not in the lattice."""
        y = mat_vec(self._snf.P, x)
        z = []
        for yi, d in zip(y, self.invariants):
            if yi % d:
                return None
            z.append(yi // d)
        return tuple(mat_vec(self._snf.Q, z))

    def transversal(self) -> list[tuple[int, ...]]:
        ranges = [range(d) for d in self.invariants]
        return [tuple(mat_vec(self._snf.U, r)) for r in itertools.product(*ranges)]


@lru_cache(maxsize=None)
def _quotient(A: tuple, k: int) -> LatticeQuotient:
    return LatticeQuotient(mat_pow(A, k))


def lattice_quotient(A: Matrix, k: int = 1) -> LatticeQuotient:
    """Cached ``Z^d / A^k Z^d``."""
    return _quotient(_freeze(A), k)


def transversal(A: Matrix, k: int) -> list[tuple[int, ...]]:
    """One representative per coset of ``A^k Z^d``."""
    if det(A) == 0:
        raise SingularMatrixError("transversal needs det A != 0")
    return lattice_quotient(A, k).transversal()


# ---------------------------------------------------------------------------
# Polynomials


@dataclass(frozen=True)
class IntPoly:
    """Integer polynomial, coefficients listed from the constant term up."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        c = list(self.coeffs)
        while len(c) > 1 and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(int(a) for a in c) or (0,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1 if self.coeffs != (0,) else -1

    @property
    def lead(self) -> int:
        return self.coeffs[-1]

    def __call__(self, x):
        out = 0
        for a in reversed(self.coeffs):
            out = out * x + a
        return out

    def __mul__(self, other: IntPoly) -> IntPoly:
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPoly(tuple(out))

    def divmod_monic(self, g: IntPoly) -> tuple[IntPoly, IntPoly]:
        if g.lead != 1:
            raise ValueError("divisor must be monic")
        r = list(self.coeffs)
        q = [0] * max(len(r) - g.degree, 1)
        for i in range(len(r) - 1, g.degree - 1, -1):
            c = r[i]
            if c:
                q[i - g.degree] = c
                for j, b in enumerate(g.coeffs):
                    r[i - g.degree + j] -= c * b
        return IntPoly(tuple(q)), IntPoly(tuple(r[: max(g.degree, 1)]))

    def __str__(self):
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            a = self.coeffs[k]
            if a == 0 and self.degree > 0:
                continue
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            mag = abs(a)
            body = (str(mag) if mag != 1 or k == 0 else "") + mono
            if not terms:
                terms.append(("-" if a < 0 else "") + body)
            else:
                terms.append(("- " if a < 0 else "+ ") + body)
        return " ".join(terms)


def charpoly(A: Matrix) -> IntPoly:
    """``det(xI - A)`` by Faddeev-LeVerrier (all divisions are exact)."""
    n = len(A)
    if any(len(row) != n for row in A):
        raise ValueError("charpoly needs a square matrix")
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    M = [[0] * n for _ in range(n)]
    for k in range(1, n + 1):
        AM = mat_mul(A, M) if k > 1 else [[0] * n for _ in range(n)]
        M = [[AM[i][j] + (coeffs[n - k + 1] if i == j else 0) for j in range(n)] for i in range(n)]
        AM = mat_mul(A, M)
        tr = sum(AM[i][i] for i in range(n))
        coeffs[n - k] = -tr // k
    return IntPoly(tuple(coeffs))


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small = [d for d in range(1, int(n**0.5) + 1) if n % d == 0]
    out = set(small) | {n // d for d in small}
    return sorted(out | {-d for d in out})


def _monic_candidates(p: IntPoly, k: int):
    """Monic degree-k integer polynomials that could divide ``p``.

    The constant term must divide ``p(0)`` and every coefficient is bounded by
    the elementary symmetric function of ``k`` roots of modulus < R (Cauchy).
    """
    R = 1 + max(abs(a) for a in p.coeffs[:-1])
    ranges = [range(-comb(k, j) * R ** (k - j), comb(k, j) * R ** (k - j) + 1) for j in range(1, k)]
    for c0 in _divisors(p.coeffs[0]):
        for mid in itertools.product(*ranges):
            yield IntPoly((c0,) + mid + (1,))


def unimodular_factor(p: IntPoly) -> IntPoly | None:
    """A monic integer factor of ``p`` (degree >= 1) with constant term +-1.

    Only factors up to half the degree are enumerated; the cofactor of each
    divisor found is inspected too, so nothing is missed.
    """
    if p.lead != 1:
        raise ValueError("expected a monic polynomial")
    if p.degree < 1:
        return None
    if p.coeffs[0] in (1, -1):
        return p
    if p.coeffs[0] == 0:
        # x is never a unit factor, so any unit factor divides p / x
        return unimodular_factor(IntPoly(p.coeffs[1:]))
    for k in range(1, p.degree // 2 + 1):
        for g in _monic_candidates(p, k):
            q, r = p.divmod_monic(g)
            if r.coeffs != (0,):
                continue
            if g.coeffs[0] in (1, -1):
                return g
            if q.coeffs[0] in (1, -1):
                return q
    return None


def has_unimodular_factor(p: IntPoly) -> bool:
    return unimodular_factor(p) is not None


def intersection_is_zero(A: Matrix) -> bool:
    """Whether the nested lattices ``A^n Z^d`` shrink to ``{0}``.

    The intersection is a lattice on which ``A`` acts bijectively, so it is
    nonzero exactly when the characteristic polynomial has a monic factor with
    unit constant term.
    """
    if det(A) == 0:
        raise SingularMatrixError("singular matrix")
    return not has_unimodular_factor(charpoly(A))


def _poly_at_matrix(f: IntPoly, A: Matrix) -> Matrix:
    n = len(A)
    out = [[0] * n for _ in range(n)]
    for a in reversed(f.coeffs):
        out = mat_mul(out, A)
        for i in range(n):
            out[i][i] += a
    return out


def surviving_vector(A: Matrix, steps: int = 8) -> tuple[int, ...] | None:
    """A nonzero vector lying in ``A^n Z^d`` for all ``n <= steps``.

    Taken from the integer kernel of ``f(A)`` for a unit-constant factor ``f``
    of the characteristic polynomial; membership is re-verified by solving.
    """
    f = unimodular_factor(charpoly(A))
    if f is None:
        return None
    res = snf(_poly_at_matrix(f, A))
    zero_cols = [i for i, d in enumerate(res.diagonal) if d == 0]
    zero_cols += list(range(len(res.diagonal), len(A)))
    v = [row[zero_cols[0]] for row in res.Q]
    for n in range(1, steps + 1):
        if solve_integer(mat_pow(A, n), v) is None:  # pragma: no cover - guarded by theory
            raise AssertionError("kernel vector failed to survive")
    return tuple(v)


def probe_survivors(A: Matrix, steps: int, box: int) -> list[tuple[int, ...]]:
    """Nonzero vectors of sup-norm <= box inside ``A^steps Z^d``."""
    Q = lattice_quotient(A, steps)
    d = len(A)
    return [
        v
        for v in itertools.product(range(-box, box + 1), repeat=d)
        if any(v) and Q.contains(v)
    ]
