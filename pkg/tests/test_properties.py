"""Property suites; runnable on their own with ``pytest tests/test_properties.py``."""

import random

import numpy as np
from hypothesis import assume, given, settings
from hypothesis import strategies as st

import mpmath

from modwb.core.numtheory import primes_up_to
from modwb.curves import EllipticCurveQ, ec_ap
from modwb.errors import SingularCurve
from modwb.siegel import (
    SiegelPoint,
    SymplecticMatrix,
    automorphy_matrix,
    build_chi,
    congruence_member,
    maass_dirichlet,
    random_principal_congruence,
    sp_action,
    standard_generators,
)
from modwb.zeta import SatakeData, satake_from_local, spinor_local

GENERATORS = standard_generators(2)
GENERATORS += [g.inverse() for g in GENERATORS]
CHI10 = None


def chi10():
    global CHI10
    if CHI10 is None:
        CHI10 = build_chi(10, 120)
    return CHI10


words = st.lists(st.integers(0, len(GENERATORS) - 1), min_size=1, max_size=5)


def word(indices):
    gamma = SymplecticMatrix.identity(2)
    for i in indices:
        gamma = gamma @ GENERATORS[i]
    return gamma


@st.composite
def siegel_points(draw):
    x = draw(st.lists(st.floats(-0.5, 0.5), min_size=3, max_size=3))
    y11 = draw(st.floats(0.8, 2.0))
    y22 = draw(st.floats(0.8, 2.0))
    y12 = draw(st.floats(-0.3, 0.3)) * min(y11, y22)
    omega = np.array([[x[0] + 1j * y11, x[1] + 1j * y12], [x[1] + 1j * y12, x[2] + 1j * y22]])
    return SiegelPoint(omega)


@settings(max_examples=60, deadline=None)
@given(words, words, siegel_points())
def test_symplectic_cocycle(w1, w2, point):
    g1, g2 = word(w1), word(w2)
    inner = sp_action(g2, point)
    lhs = np.linalg.det(automorphy_matrix(g1 @ g2, point))
    rhs = np.linalg.det(automorphy_matrix(g1, inner)) * np.linalg.det(automorphy_matrix(g2, point))
    assert abs(lhs - rhs) <= 1e-10 * max(1.0, abs(lhs))
    composed = sp_action(g1 @ g2, point).omega
    stepwise = sp_action(g1, inner).omega
    assert np.max(np.abs(composed - stepwise)) <= 1e-10 * max(1.0, np.max(np.abs(composed)))


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 6), st.integers(0, 2**32 - 1), words)
def test_membership_chain(N, seed, w):
    gamma = random_principal_congruence(2, N, random.Random(seed))
    assert congruence_member(gamma, N, "principal")
    for g in (gamma, word(w), gamma @ word(w)):
        if congruence_member(g, N, "principal"):
            assert congruence_member(g, N, "gamma1")
        if congruence_member(g, N, "gamma1"):
            assert congruence_member(g, N, "gamma0")
        assert congruence_member(g, N, "full")


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(-20, 20), min_size=5, max_size=5))
def test_hasse_bound(ainvs):
    try:
        E = EllipticCurveQ.from_ainvs(ainvs)
    except SingularCurve:
        assume(False)
    for p in primes_up_to(97):
        if E.discriminant % p:
            ap = ec_ap(E, p)
            assert ap * ap <= 4 * p


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([2, 3, 5, 7, 11]), st.sampled_from([1, 2]), st.integers(2, 14),
       st.lists(st.floats(0, 6.283), min_size=2, max_size=2))
def test_satake_round_trip(p, g, k, phases):
    alpha = [mpmath.expj(t) for t in phases[:g]]
    a0 = mpmath.sqrt(mpmath.mpf(p) ** (g * k - g * (g + 1) // 2) / mpmath.fprod(alpha))
    poly = spinor_local(SatakeData(p, g, k, (a0, *alpha)))
    back = spinor_local(satake_from_local(poly, p, g, k))
    scale = max(abs(c) for c in poly.coeffs)
    assert all(abs(back[i] - poly[i]) <= 1e-8 * scale for i in range(2**g + 1))


@settings(max_examples=25, deadline=None)
@given(st.floats(7.5, 30.0), st.integers(3, 60), st.integers(1, 60))
def test_dseries_truncation_monotone(sigma, x1, step):
    F = chi10()
    x2 = min(x1 + step, F.det_bound)
    assume(x2 > x1)
    small = maass_dirichlet(F, sigma, x1)
    large = maass_dirichlet(F, sigma, x2)
    # fixed growth constant so the two tails are comparable
    c = max(small.growth_constant, large.growth_constant)
    t1 = maass_dirichlet(F, sigma, x1, growth_constant=c).tail_bound
    t2 = maass_dirichlet(F, sigma, x2, growth_constant=c).tail_bound
    assert t2 <= t1
    assert abs(large.value - small.value) <= t1 * (1 + 1e-12)
