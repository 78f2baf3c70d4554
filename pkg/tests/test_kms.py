"""Scaling data, partition functions and the KMS / ground-state evaluators."""

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rightlcm import Verdict, right_lcm
from rightlcm.families import AddingMachine, BS, FreeMonoid, MatrixFamily, NxP
from rightlcm.kms import (
    DivergenceError,
    SpanningElement,
    TraceSpec,
    beta_regime,
    class_reps,
    ground_state,
    is_minimal,
    minimality_report,
    phi_bs,
    psi_beta,
    psi_beta_tau,
    psi_series_bs,
    recover_trace,
    scale_N,
    scale_data,
    zeta,
    zeta_closed,
)

from conftest import FAMILIES

TRACES = {
    "point": TraceSpec.point(0),
    "two-atom": TraceSpec.uniform([0, Fraction(1, 2)]),
    "canonical": TraceSpec.canonical_trace(),
}


def span(fam, s, t=None):
    return SpanningElement(fam.parse(s), fam.parse(t if t is not None else s))


# -- scaling -------------------------------------------------------------------


def test_scale_examples():
    assert scale_N(NxP([2, 3, 5]).parse("(3,5)")) == 5
    assert scale_N(BS(2, 3).parse("ba")) == 3
    for fam in FAMILIES.values():
        for c in fam.core_samples(2):
            assert scale_N(c) == 1


def test_scale_multiplicative(family):
    els = family.enumerate(3 if family.count(3) < 200 else 2)
    for s in els:
        assert (scale_N(s) == 1) == family.is_core(s)
        for t in els:
            assert scale_N(s * t) == scale_N(s) * scale_N(t)


def test_scale_data_rows(bs, mat, adding, nxp):
    assert scale_data(bs).kappa == 3 and scale_data(bs).beta_c == 1
    assert scale_data(mat).kappa == 2
    assert scale_data(adding).kappa == 2
    row = scale_data(nxp)
    assert row.beta_c == 2 and not row.covered


def test_class_reps_examples(nxp2, bs, family):
    assert {str(s) for s in class_reps(nxp2, 2)} == {
        "(0,1)", "(0,2)", "(1,2)", "(0,4)", "(1,4)", "(2,4)", "(3,4)"
    }
    assert {str(s) for s in class_reps(bs, 1)} == {"1", "a", "ba", "bba"}
    assert class_reps(family, 0) == [family.identity]


def test_class_reps_are_distinct_classes(family):
    reps = class_reps(family, 2)
    # s ~ s·c for core c: distinct classes have no common core multiple in a small window
    core = family.core_samples(2)
    for i, s in enumerate(reps):
        for t in reps[i + 1:]:
            assert not any(s * c == t * d for c in core for d in core)


# -- ζ ---------------------------------------------------------------------------


def test_zeta_examples(bs, mat):
    assert abs(zeta(bs, 2, 40) - 1.5) < 1e-9
    assert abs(zeta(mat, 2, 40) - 2) < 1e-9
    assert abs(zeta_closed(bs, 60) - 1) < 1e-12


def test_zeta_nxp_closed_form(nxp):
    expect = 1 / ((1 - 2.0 ** (1 - 3)) * (1 - 3.0 ** (1 - 3)))
    assert abs(zeta_closed(nxp, 3) - expect) < 1e-12
    assert abs(zeta(nxp, 3, 60) - expect) < 1e-9


@pytest.mark.parametrize("name", ["nxp", "bs", "matrix", "free", "adding"])
@pytest.mark.parametrize("beta", [2.6, 3.0, 4.0])
def test_zeta_truncation_converges(name, beta):
    fam = FAMILIES[name]
    exact = zeta_closed(fam, beta)
    errs = [abs(zeta(fam, beta, n) - exact) for n in range(0, 41, 5)]
    # monotone until the error reaches rounding level
    ulp = 8 * math.ulp(exact)
    assert all(b <= a + ulp for a, b in zip(errs, errs[1:]))
    assert errs[-1] < 1e-9


def test_zeta_diverges_below_abscissa(bs, free):
    with pytest.raises(DivergenceError):
        zeta_closed(bs, 1.0)
    with pytest.raises(DivergenceError):
        zeta_closed(free, 0.5)


def test_beta_regime(bs):
    assert beta_regime(bs, 2.0) != beta_regime(bs, 0.5)


# -- minimality --------------------------------------------------------------------


def test_minimality_table():
    assert is_minimal(BS(2, 3)) is Verdict.TRUE
    assert is_minimal(BS(4, 2)) is Verdict.FALSE
    rep = minimality_report(MatrixFamily([[1, 0], [0, 2]]))
    assert rep["verdict"] == "false" and rep["surviving_vector"] == [1, 0]
    assert is_minimal(MatrixFamily([[0, 2], [1, 0]])) is Verdict.TRUE
    assert is_minimal(MatrixFamily([[2, 0], [0, 3]])) is Verdict.TRUE
    assert is_minimal(AddingMachine()) is Verdict.TRUE


@given(st.integers(1, 12), st.integers(2, 6))
def test_bs_minimality_criterion(c, d):
    assert bool(is_minimal(BS(c, d))) == (c % d != 0)


# -- evaluators ----------------------------------------------------------------------


def test_psi_beta_examples(nxp2, family):
    assert psi_beta(span(nxp2, "(0,2)"), 2) == 0.25
    assert psi_beta(span(nxp2, "(0,2)", "(1,2)"), 2) == 0
    one = SpanningElement(family.identity, family.identity)
    assert psi_beta(one, 1.7) == 1


def test_psi_beta_tau_examples(nxp2):
    tau = TRACES["point"]
    assert psi_beta_tau(span(nxp2, "(0,2)", "(2,2)"), 3, tau) == 0.125
    assert psi_beta_tau(span(nxp2, "(0,2)", "(1,2)"), 3, tau) == 0
    for name, tau in TRACES.items():
        assert psi_beta_tau(span(nxp2, "(1,4)"), 2, tau) == pytest.approx(4.0**-2)


def test_psi_beta_tau_by_hand(bs):
    # ψ(v_b v_{b^2}*): b·b = b^2, so x = b, y = 1 and τ(w_1 w_b*) = conj of the first moment
    tau = TRACES["two-atom"]
    assert psi_beta_tau(span(bs, "b", "bb"), 2, tau) == 0
    assert psi_beta_tau(span(bs, "b", "bbb"), 2, tau) == pytest.approx(1.0)
    assert psi_beta_tau(span(bs, "a", "ba"), 2, tau) == 0


@pytest.mark.parametrize("name", ["nxp", "matrix", "bs"])
def test_psi_beta_matches_canonical_trace(name):
    fam = FAMILIES[name]
    els = fam.enumerate(3 if fam.count(3) < 200 else 2)
    canon = TRACES["canonical"]
    for s in els:
        for t in els:
            x = SpanningElement(s, t)
            for beta in (1.5, 2.5):
                assert abs(psi_beta(x, beta) - psi_beta_tau(x, beta, canon)) < 1e-12


def test_diagonal_values_in_unit_interval(family):
    for s in family.enumerate(2):
        x = SpanningElement(s, s)
        for tau in TRACES.values():
            if family.kind in ("matrix", "adding", "free", "nxp") and tau is not TRACES["canonical"]:
                continue
            v = psi_beta_tau(x, 2.0, tau)
            assert 0 <= v <= 1
        assert 0 <= psi_beta(x, 2.0) <= 1


def test_ground_state_examples(bs, nxp2, family):
    assert ground_state(span(bs, "bb"), TRACES["point"]) == 1
    assert ground_state(span(nxp2, "(0,2)"), TRACES["point"]) == 0
    one = SpanningElement(family.identity, family.identity)
    assert ground_state(one, TraceSpec.canonical_trace(1)) == 1


def test_ground_state_vanishes_off_core(family):
    phi = TraceSpec.canonical_trace()
    for s in family.enumerate(2):
        for t in family.enumerate(1):
            if not (family.is_core(s) and family.is_core(t)):
                assert ground_state(SpanningElement(s, t), phi) == 0


# -- the b^n series --------------------------------------------------------------------


def test_series_examples(bs):
    tau = TRACES["point"]
    assert abs(psi_series_bs(bs, 3, 2, tau) - 8 / 9) < 1e-12
    assert abs(psi_series_bs(bs, 2, 2, tau) - 2 / 3) < 1e-12
    for t in TRACES.values():
        assert abs(psi_series_bs(bs, 0, 2, t) - 1) < 1e-12


def test_recover_examples(bs):
    out = recover_trace(bs, {3: Fraction(4, 3), 2: 1}, 2)
    assert abs(out[3] - 1) < 1e-12 and out[2] == 1
    canon = TRACES["canonical"]
    phi = {n: phi_bs(bs, n, 2.5, canon) for n in range(0, 31)}
    rec = recover_trace(bs, phi, 2.5)
    for n, v in rec.items():
        assert abs(v - (1 if n == 0 else 0)) < 1e-12


def test_recover_needs_closed_range(bs):
    with pytest.raises(ValueError):
        recover_trace(bs, {3: 1.0}, 2)


@pytest.mark.parametrize("tau", list(TRACES.values()), ids=list(TRACES))
@given(beta=st.floats(1.2, 4.0), n=st.integers(0, 60))
@settings(max_examples=40, deadline=None)
def test_series_recursion(tau, beta, n):
    S = BS(2, 3)
    lhs = phi_bs(S, n, beta, tau)
    rhs = tau.moment(n)
    if n % 3 == 0:
        rhs += 3.0 ** (1 - beta) * phi_bs(S, n * 2 // 3, beta, tau)
    assert abs(lhs - rhs) < 1e-9


@pytest.mark.parametrize("c,d", [(2, 3), (3, 2), (6, 3), (1, 2)])
def test_series_positive_definite_moments(c, d):
    # with τ a point mass the series is a positive combination of ones
    S = BS(c, d)
    for n in range(10):
        v = psi_series_bs(S, n, 2.0, TRACES["point"])
        assert 0 < v <= 1 + 1e-12


def test_series_rejects_small_beta(bs):
    with pytest.raises(DivergenceError):
        psi_series_bs(bs, 3, 1.0, TRACES["point"])


def test_trace_json_round_trip():
    for tau in TRACES.values():
        assert TraceSpec.from_json(tau.to_json()) == tau
    t2 = TraceSpec.uniform([(0, 0), (Fraction(1, 2), Fraction(1, 4))], 2)
    assert TraceSpec.from_json(t2.to_json()) == t2
    assert t2.moment((1, 0)) == 0


def test_trace_validation():
    with pytest.raises(ValueError):
        TraceSpec(((Fraction(0),), Fraction(1, 2)),)
    with pytest.raises(ValueError):
        TraceSpec((((Fraction(0),), Fraction(3, 2)), ((Fraction(1, 2),), Fraction(-1, 2))))


def test_moment_is_fourier_coefficient():
    tau = TraceSpec.uniform([Fraction(1, 3), Fraction(1, 5)])
    for k in range(-4, 5):
        expect = sum(complex(math.cos(2 * math.pi * a * k), math.sin(2 * math.pi * a * k)) for a in (1 / 3, 1 / 5)) / 2
        assert abs(tau.moment(k) - expect) < 1e-12
