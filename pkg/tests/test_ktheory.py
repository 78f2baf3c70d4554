import random
from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from rightlcm.ktheory import (
    FGAbGroup,
    KPair,
    UNIT,
    direct_sum,
    g_P,
    k_boundary_bs,
    k_boundary_nxp,
    k_cuntz,
    k_torsion_subalgebra,
    kunneth,
    normalize_presentation,
    orders_divide,
    tensor,
    tor,
)

Z = FGAbGroup(1)
ZERO = FGAbGroup()


def cyc(*ns):
    return direct_sum(*(FGAbGroup.cyclic(n) for n in ns))


groups = st.lists(st.integers(0, 12), max_size=4).map(lambda ns: cyc(*ns))


def _order_profile(G):
    """Number of elements of order dividing m for small m; determines finite groups."""
    out = []
    for m in range(1, 13):
        count = 1
        for d in G.torsion:
            count *= gcd(d, m)
        out.append(count)
    return G.rank, out


def test_invariant_factor_form():
    assert FGAbGroup(0, (2, 3)).torsion == (6,)
    assert FGAbGroup(0, (4, 2, 1)).torsion == (2, 4)
    assert str(FGAbGroup(2, (2,))) == "Z^2 ⊕ Z/2"
    assert str(ZERO) == "0"
    assert FGAbGroup.cyclic(0) == Z and FGAbGroup.cyclic(1) == ZERO


@given(st.lists(st.integers(1, 30), max_size=5))
def test_invariant_factors_preserve_group(ns):
    G = FGAbGroup(0, tuple(ns))
    ds = G.torsion
    assert all(b % a == 0 for a, b in zip(ds, ds[1:]))
    assert 1 not in ds
    # same number of elements of each order as the original sum
    for m in range(1, 31):
        a = b = 1
        for n in ns:
            a *= gcd(n, m)
        for d in ds:
            b *= gcd(d, m)
        assert a == b


def test_normalize_presentation_examples():
    G = normalize_presentation([[2, 0], [0, 4]])
    assert (G.rank, G.torsion) == (0, (2, 4))
    G = normalize_presentation([[2, 0]])
    assert (G.rank, G.torsion) == (1, (2,))
    assert normalize_presentation([], 2) == FGAbGroup(2)


def test_presentation_of_direct_sum():
    rng = random.Random(0)
    for _ in range(30):
        ns = [rng.randint(0, 9) for _ in range(rng.randint(1, 4))]
        rel = [[n if i == j else 0 for j in range(len(ns))] for i, n in enumerate(ns)]
        assert normalize_presentation(rel) == cyc(*ns)


def test_tensor_tor_examples():
    assert tensor(cyc(4), cyc(6)) == cyc(2)
    assert tor(cyc(2), cyc(4)) == cyc(2)
    G = cyc(0, 3, 4)
    assert tensor(Z, G) == G
    assert tor(Z, G) == ZERO


@given(groups, groups)
def test_sum_commutes(G, H):
    assert G + H == H + G
    assert tensor(G, H) == tensor(H, G)
    assert tor(G, H) == tor(H, G)


@given(groups, groups, groups)
def test_sum_associates_and_tensor_distributes(G, H, K):
    assert (G + H) + K == G + (H + K)
    assert tensor(G, H + K) == tensor(G, H) + tensor(G, K)
    assert tor(G, H + K) == tor(G, H) + tor(G, K)


@given(groups, groups)
def test_kunneth_unit(G, H):
    K = KPair(G, H)
    assert kunneth(UNIT, K).groups() == K.groups()
    assert kunneth(K, UNIT).groups() == K.groups()


def test_kunneth_examples():
    K = kunneth(k_cuntz(3), k_cuntz(5))
    assert K.k0 == cyc(2) and K.k1 == cyc(2)
    for p in (3, 5, 7):
        K = kunneth(k_cuntz(2), k_cuntz(p))
        assert K.k0 == ZERO and K.k1 == ZERO


def test_cuntz_examples():
    assert k_cuntz(2).groups() == (ZERO, ZERO)
    assert k_cuntz(3).groups() == (cyc(2), ZERO)
    assert k_cuntz(5).groups() == (cyc(4), ZERO)
    with pytest.raises(ValueError):
        k_cuntz(1)


def test_torsion_subalgebra_examples():
    K = k_torsion_subalgebra([2, 3])
    assert K.groups() == (ZERO, ZERO) and K.status == "theorem"
    K = k_torsion_subalgebra([3, 5])
    assert K.groups() == (cyc(2), cyc(2)) and K.status == "theorem"
    K = k_torsion_subalgebra([3, 5, 7])
    assert K.status == "conjectural"
    assert orders_divide(K.k0, 2) and orders_divide(K.k1, 2)


def test_nxp_examples():
    K = k_boundary_nxp([3, 5])
    assert K.k0 == FGAbGroup(2, (2,)) and K.k1 == FGAbGroup(2, (2,))
    assert k_boundary_nxp([2]).groups() == (Z, Z)
    K = k_boundary_nxp([2, 3])
    assert not K.k0.torsion and not K.k1.torsion
    assert k_boundary_nxp([3, 5, 7]).status == "conjectural"


def test_bs_examples():
    assert k_boundary_bs(2, 3).groups() == (cyc(2), ZERO)
    K = k_boundary_bs(1, 1)
    assert K.groups() == (FGAbGroup(2), FGAbGroup(2))
    assert K.k0.rank + K.k1.rank == 4 and not K.k0.torsion and not K.k1.torsion
    # δ_{1c} contributes ℤ to K0 and ℤ/(c−1) = ℤ/0 = ℤ to K1
    K = k_boundary_bs(1, 4)
    assert K.k0 == FGAbGroup(1, (3,))
    assert K.k1 == Z


@given(st.integers(1, 20), st.integers(1, 20))
def test_bs_formula(c, d):
    K = k_boundary_bs(c, d)
    assert K.k0.rank == (c == 1) + (d == 1)
    assert K.k1.rank == (d == 1) + (c == 1)
    assert K.k0.torsion == ((d - 1,) if d > 2 else ())
    assert K.k1.torsion == ((c - 1,) if c > 2 else ())


def test_g_P_examples():
    assert g_P([3, 5]) == 2 and g_P([2, 3]) == 1 and g_P([7]) == 6


def test_orders_divide_examples():
    assert orders_divide(cyc(2, 2), 2)
    assert not orders_divide(cyc(4), 2)
    assert not orders_divide(FGAbGroup(1), 6)


coprime_sets = st.lists(st.integers(2, 40), min_size=1, max_size=4).filter(
    lambda P: all(gcd(p, q) == 1 for i, p in enumerate(P) for q in P[:i])
)


@given(coprime_sets)
def test_torsion_subalgebra_exponent(P):
    K = k_torsion_subalgebra(P)
    g = g_P(P)
    assert orders_divide(K.k0, g) and orders_divide(K.k1, g)
    assert K.status == ("theorem" if len(P) <= 2 else "conjectural")


@given(coprime_sets)
def test_nxp_free_rank(P):
    K = k_boundary_nxp(P)
    assert K.k0.rank == K.k1.rank == 2 ** (len(P) - 1)


def test_json_round_trip():
    G = FGAbGroup(3, (2, 6))
    assert FGAbGroup.from_json(G.to_json()) == G
    assert k_boundary_bs(2, 3).to_json() == {
        "K0": {"rank": 0, "torsion": [2]},
        "K1": {"rank": 0, "torsion": []},
    }
