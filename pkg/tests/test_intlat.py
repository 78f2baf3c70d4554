import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rightlcm.intlat import (
    IntPoly,
    SingularMatrixError,
    charpoly,
    det,
    has_unimodular_factor,
    intersection_is_zero,
    lattice_quotient,
    mat_mul,
    mat_pow,
    mat_vec,
    probe_survivors,
    snf,
    solve_integer,
    surviving_vector,
    transversal,
    unimodular_factor,
)


def rand_matrix(rng, rows, cols, lo=-9, hi=9):
    return [[rng.randint(lo, hi) for _ in range(cols)] for _ in range(rows)]


# -- Smith normal form -------------------------------------------------------


def test_snf_examples():
    assert snf([[1, 1], [0, 2]]).diagonal == [1, 2]
    assert snf([[2, 0], [0, 2]]).diagonal == [2, 2]
    assert snf([[0]]).diagonal == [0]


def test_snf_random_remultiplication():
    rng = random.Random(7)
    for _ in range(100):
        d = rng.randint(1, 4)
        cols = rng.randint(1, 4)
        A = rand_matrix(rng, d, cols)
        r = snf(A)
        assert mat_mul(mat_mul(r.U, r.D), r.V) == A
        assert abs(det(r.U)) == 1 and abs(det(r.V)) == 1
        assert mat_mul(r.P, r.U) == [[int(i == j) for j in range(d)] for i in range(d)]
        diag = r.diagonal
        # divisibility chain, zeros last
        nz = [x for x in diag if x]
        assert all(x > 0 for x in nz)
        assert all(b % a == 0 for a, b in zip(nz, nz[1:]))
        assert diag[: len(nz)] == nz


@given(st.lists(st.integers(-6, 6), min_size=4, max_size=4))
def test_snf_2x2_invariants(entries):
    A = [entries[:2], entries[2:]]
    r = snf(A)
    a, b = r.diagonal
    # d1 = gcd of entries, d1*d2 = |det|
    from math import gcd

    g = 0
    for x in entries:
        g = gcd(g, x)
    assert a == g
    assert a * b == abs(det(A))


# -- integer solving ---------------------------------------------------------


def test_solve_examples():
    A = [[1, 1], [0, 2]]
    x = solve_integer(A, [1, 2])
    assert mat_vec(A, x) == [1, 2]
    assert x == [0, 1]
    assert solve_integer(A, [0, 1]) is None
    assert solve_integer([[1, 0], [0, 1]], [4, -3]) == [4, -3]


def test_solve_brute_force_3x3():
    rng = random.Random(3)
    box = range(-10, 11)
    for _ in range(12):
        A = rand_matrix(rng, 3, 3, -3, 3)
        b = [rng.randint(-6, 6) for _ in range(3)]
        x = solve_integer(A, b)
        if x is not None:
            assert mat_vec(A, x) == b
            continue
        if det(A) != 0:
            # nonsingular: any solution is unique and would lie in the box if small
            assert not any(mat_vec(A, list(v)) == b for v in itertools.product(box, repeat=3))


def test_solve_completeness_on_planted_solutions():
    rng = random.Random(11)
    for _ in range(60):
        A = rand_matrix(rng, 3, 3, -4, 4)
        x0 = [rng.randint(-5, 5) for _ in range(3)]
        b = mat_vec(A, x0)
        x = solve_integer(A, b)
        assert x is not None and mat_vec(A, x) == b


# -- quotients and transversals ----------------------------------------------


def test_transversal_examples():
    assert len(transversal([[1, 1], [0, 2]], 1)) == 2
    assert sorted(transversal([[2, 0], [0, 2]], 1)) == [(0, 0), (0, 1), (1, 0), (1, 1)]
    assert transversal([[3, 1], [1, 5]], 0) == [(0, 0)]


@pytest.mark.parametrize("A,k", [([[1, 1], [0, 2]], 3), ([[2, 1], [0, 3]], 2), ([[0, 2], [1, 0]], 3)])
def test_transversal_one_per_coset(A, k):
    Ak = mat_pow(A, k)
    T = transversal(A, k)
    assert len(T) == abs(det(Ak))
    for u, v in itertools.combinations(T, 2):
        diff = [a - b for a, b in zip(u, v)]
        assert solve_integer(Ak, diff) is None
    Q = lattice_quotient(A, k)
    rng = random.Random(k)
    for _ in range(30):
        x = [rng.randint(-20, 20) for _ in range(len(A))]
        r = Q.reduce(x)
        assert r in set(T)
        assert solve_integer(Ak, [a - b for a, b in zip(x, r)]) is not None


def test_quotient_solve_matches_solve_integer():
    Q = lattice_quotient([[1, 1], [0, 2]], 2)
    B = mat_pow([[1, 1], [0, 2]], 2)
    for x in itertools.product(range(-4, 5), repeat=2):
        k = Q.solve(list(x))
        ref = solve_integer(B, list(x))
        assert (k is None) == (ref is None)
        if k is not None:
            assert mat_vec(B, list(k)) == list(x)


# -- characteristic polynomials and unimodular factors -----------------------


def test_charpoly_examples():
    assert str(charpoly([[0, 2], [1, 0]])) == "x^2 - 2"
    assert charpoly([[1, 0], [0, 2]]) == IntPoly([2, -3, 1])
    assert charpoly([[1, 0], [0, 1]]) == IntPoly([1, -2, 1])


@given(st.lists(st.integers(-5, 5), min_size=9, max_size=9))
@settings(max_examples=60)
def test_charpoly_cayley_hamilton(entries):
    A = [entries[0:3], entries[3:6], entries[6:9]]
    p = charpoly(A)
    acc = [[0] * 3 for _ in range(3)]
    for i, c in enumerate(p.coeffs):
        P = mat_pow(A, i)
        acc = [[acc[r][s] + c * P[r][s] for s in range(3)] for r in range(3)]
    assert acc == [[0] * 3 for _ in range(3)]
    assert p.coeffs[0] == (-1) ** 3 * det(A)


def test_unimodular_examples():
    assert has_unimodular_factor(IntPoly([1, -3, 1]))
    assert has_unimodular_factor(IntPoly([2, -3, 1]))
    assert not has_unimodular_factor(IntPoly([-2, 0, 1]))
    f = unimodular_factor(IntPoly([2, -3, 1]))
    assert f is not None and abs(f.coeffs[0]) == 1


def _exact_quotient(coeffs, g):
    """``coeffs / g`` for monic ``g`` if the division is exact, else None."""
    n = len(coeffs) - 1
    rem = list(coeffs)
    q = [0] * (n - len(g) + 2)
    for k in range(n - len(g) + 1, -1, -1):
        q[k] = rem[k + len(g) - 1]
        for j, b in enumerate(g):
            rem[k + j] -= q[k] * b
    return None if any(rem) else q


def _brute_unimodular(coeffs):
    """Exhaustive search over monic factors of degree 1 and 2.

    For degree <= 4 every proper factor of degree 3 or more is the cofactor of
    one of degree 1 or 2, so a unimodular factor exists iff the constant term
    is ±1 or some small factor or its cofactor has constant term ±1.
    Root bounds keep the linear and middle coefficients within [-12, 12].
    """
    c0 = abs(coeffs[0])
    if c0 == 1:
        return True
    n = len(coeffs) - 1
    small = [[c, 1] for c in range(-12, 13)]
    small += [[c, b, 1] for c in range(-25, 26) for b in range(-12, 13)]
    for g in small:
        if len(g) - 1 >= n:
            continue
        q = _exact_quotient(coeffs, g)
        if q is not None and (abs(g[0]) == 1 or abs(q[0]) == 1):
            return True
    return False


def test_unimodular_matches_exhaustive_search():
    rng = random.Random(5)
    polys = [list(c) + [1] for c in itertools.product(range(-5, 6), repeat=2)]
    polys += [[rng.randint(-5, 5) for _ in range(d)] + [1] for d in (3, 4) for _ in range(400)]
    for c in polys:
        assert has_unimodular_factor(IntPoly(c)) == _brute_unimodular(c), c


def test_intersection_examples():
    assert intersection_is_zero([[1, 0], [0, 2]]) is False
    assert surviving_vector([[1, 0], [0, 2]]) == (1, 0)
    assert intersection_is_zero([[0, 2], [1, 0]]) is True
    assert intersection_is_zero([[2, 0], [0, 3]]) is True
    with pytest.raises(SingularMatrixError):
        intersection_is_zero([[1, 0], [0, 0]])


@pytest.mark.parametrize(
    "A", [[[1, 0], [0, 2]], [[1, 1], [0, 2]], [[2, 0, 0], [0, 1, 0], [0, 0, 3]], [[1, 0], [0, 3]]]
)
def test_false_criterion_exhibits_survivor(A):
    assert intersection_is_zero(A) is False
    v = surviving_vector(A)
    assert v is not None and any(v)
    for n in range(1, 7):
        assert solve_integer(mat_pow(A, n), list(v)) is not None


def test_probe_agrees_with_criterion():
    # a nonzero survivor of the bounded probe only exists when the criterion says so
    for A in ([[2, 1], [0, 2]], [[0, 2], [1, 0]], [[1, 0], [0, 2]], [[3, 1], [1, 1]]):
        found = probe_survivors(A, 5, 3)
        if intersection_is_zero(A):
            assert found == []
        else:
            assert found
