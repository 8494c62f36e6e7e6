import random
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from modwb.core.dirichlet import dirichlet_partial
from modwb.core.numtheory import primes_up_to
from modwb.core.polynomial import Polynomial
from modwb.errors import PreconditionError, SingularSatake, UnresolvedSatake
from modwb.forms import delta_qexp, eisenstein_qexp, newform_expansion, registry_newforms
from modwb.zeta import (
    EigenvalueData,
    SatakeData,
    euler_eval,
    remark_standard_identity_check,
    satake_from_local,
    satake_g1,
    sk_eigenvalues,
    spinor_local,
    spinor_local_g2_from_eigenvalues,
    standard_local,
)


@pytest.fixture(scope="module")
def f18():
    return (delta_qexp(30).expansion * eisenstein_qexp(6, 30).expansion).coefficients()


@pytest.fixture(scope="module")
def delta_ap():
    d = delta_qexp(2000).expansion
    return {p: int(d.coeff(p)) for p in primes_up_to(2000)}


def hecke_factor(ap, p, k):
    return Polynomial([1, -Fraction(ap), p ** (k - 1)])


def test_spinor_from_tau_2():
    assert spinor_local(satake_g1(-24, 2, 12)) == Polynomial([1, 24, 2048])


@pytest.mark.parametrize("g", [1, 2, 3])
def test_collapsed_parameters(g):
    p, k = 3, 10
    a0 = mpmath.sqrt(mpmath.mpf(p) ** (g * k - g * (g + 1) // 2))
    sd = SatakeData(p, g, k, (a0,) + (1,) * g)
    poly = spinor_local(sd)
    assert poly.degree == 2**g and poly[0] == 1
    expected = Polynomial([1, -a0]) ** (2**g)
    assert all(abs(poly[i] - expected[i]) <= 1e-12 * abs(expected[i]) for i in range(2**g + 1))


def test_normalization_invariant_enforced():
    with pytest.raises(PreconditionError):
        SatakeData(2, 1, 12, (1, 1))
    with pytest.raises(PreconditionError):
        SatakeData(2, 2, 10, (1, 1))


def test_standard_factor_shapes():
    p, k = 5, 12
    a0 = mpmath.sqrt(mpmath.mpf(p) ** (k - 1))
    trivial = standard_local(SatakeData(p, 1, k, (a0, 1), exact=True))
    assert trivial == Polynomial([1, -1]) ** 3
    poly = standard_local(satake_g1(-24, 2, 12))
    assert poly.degree == 3
    # roots closed under r -> 1/r
    roots = poly.roots()
    for r in roots:
        assert min(abs(1 / r - s) for s in roots) < 1e-9


def test_standard_factor_at_g2_has_degree_five():
    sd = satake_from_local(spinor_local_g2_from_eigenvalues(sk_eigenvalues(-528, None, 10, 2)), 2, 2, 10)
    poly = standard_local(sd)
    assert poly.degree == 5
    roots = poly.roots()
    for r in roots:
        assert min(abs(1 / r - s) for s in roots) < 1e-9


def test_singular_parameters():
    sd = satake_g1(-24, 2, 12, exact=False)
    object.__setattr__(sd, "alpha", (sd.alpha[0], mpmath.mpc(0)))
    with pytest.raises(SingularSatake):
        standard_local(sd)


def test_spinor_equals_hecke_factor_for_delta(delta_ap):
    for p in primes_up_to(50):
        assert spinor_local(satake_g1(delta_ap[p], p, 12)) == hecke_factor(delta_ap[p], p, 12)


@pytest.mark.parametrize("record", registry_newforms(), ids=lambda r: r.label)
def test_spinor_equals_hecke_factor_for_registry(record):
    f = newform_expansion(record, 50)
    for p in primes_up_to(50):
        if record.level % p:
            assert spinor_local(satake_g1(f.coeff(p), p, 2)) == hecke_factor(f.coeff(p), p, 2)


def test_eigenvalue_polynomial_shape():
    ev = EigenvalueData(3, Fraction(7), Fraction(11), 10)
    poly = spinor_local_g2_from_eigenvalues(ev)
    assert poly[0] == 1 and poly[4] == 3 ** (4 * 10 - 6)
    assert poly[3] == 3 ** (2 * 10 - 3) * poly[1]
    with pytest.raises(PreconditionError):
        spinor_local_g2_from_eigenvalues(EigenvalueData(3, 1, 1, 10, g=3))


def test_sk_eigenvalues(f18):
    assert f18[2] == -528
    assert sk_eigenvalues(-528, None, 10, 2).lambda_p == 240
    assert sk_eigenvalues(f18[3], None, 10, 3).lambda_p == f18[3] + 3**9 + 3**8
    assert sk_eigenvalues(0, None, 10, 5).lambda_p == 5**9 + 5**8
    assert sk_eigenvalues(f18[2], f18[4], 10, 2).lambda_p2 == sk_eigenvalues(f18[2], None, 10, 2).lambda_p2
    with pytest.raises(PreconditionError):
        sk_eigenvalues(-528, 1, 10, 2)


@pytest.mark.parametrize("p", [2, 3, 5, 7, 11])
def test_sk_factorization(f18, p):
    k = 10
    poly = spinor_local_g2_from_eigenvalues(sk_eigenvalues(f18[p], None, k, p))
    expected = Polynomial([1, -p ** (k - 1)]) * Polynomial([1, -p ** (k - 2)]) * hecke_factor(f18[p], p, 18)
    assert poly == expected


def test_satake_from_local_g1():
    poly = Polynomial([1, 24, 2048])
    sd = satake_from_local(poly, 2, 1, 12)
    assert abs(sd.alpha[0] ** 2 * sd.alpha[1] - 2048) < 1e-9
    assert spinor_local(sd) == poly


def test_satake_from_local_split_case():
    p, k = 3, 12
    poly = Polynomial([1, -1]) * Polynomial([1, -p ** (k - 1)])
    sd = satake_from_local(poly, p, 1, k)
    assert min(abs(sd.alpha[0] - 1), abs(sd.alpha[0] - p ** (k - 1))) < 1e-9
    assert spinor_local(sd) == poly


def test_satake_from_local_sk_example(f18):
    poly = spinor_local_g2_from_eigenvalues(sk_eigenvalues(f18[2], None, 10, 2))
    sd = satake_from_local(poly, 2, 2, 10)
    assert spinor_local(sd) == poly


def test_unresolved_satake():
    with pytest.raises(UnresolvedSatake):
        satake_from_local(Polynomial([1, 1, 1, 1, 1]), 2, 2, 10)
    with pytest.raises(UnresolvedSatake):
        satake_from_local(Polynomial([1, 1]), 2, 1, 12)


@settings(max_examples=25, deadline=None)
@given(st.sampled_from([2, 3, 5, 7]), st.sampled_from([1, 2]), st.integers(4, 12),
       st.lists(st.floats(0, 6.283), min_size=2, max_size=2))
def test_satake_round_trip(p, g, k, phases):
    # unitary alpha_i and the matching alpha_0
    alpha = [mpmath.expj(t) for t in phases[:g]]
    a0 = mpmath.sqrt(mpmath.mpf(p) ** (g * k - g * (g + 1) // 2) / mpmath.fprod(alpha))
    sd = SatakeData(p, g, k, (a0, *alpha))
    poly = spinor_local(sd)
    back = spinor_local(satake_from_local(poly, p, g, k))
    scale = max(abs(c) for c in poly.coeffs)
    assert all(abs(back[i] - poly[i]) <= 1e-8 * scale for i in range(2**g + 1))


def test_euler_eval_trivial_cases():
    assert euler_eval({}, 3, 100).value == 1
    res = euler_eval({2: Polynomial([1, -1])}, 3, 100)
    assert res.value == pytest.approx(1 / (1 - 2**-3))


def test_euler_eval_matches_l_series_of_delta(delta_ap):
    factors = {p: spinor_local(satake_g1(delta_ap[p], p, 12)) for p in primes_up_to(100)}
    euler = euler_eval(factors, 14, 100)
    series = dirichlet_partial(delta_qexp(2000), 14, 2000, 6.0)
    assert abs(euler.value - series.value) <= euler.tail_bound + series.tail_bound


def test_standard_identity_corrected_reading(delta_ap):
    report = remark_standard_identity_check(delta_ap, 12, 20, 200, 2000)
    assert report.corrected_passes(1e-6)
    assert report.difference > 1e-3
    # the printed reading misses exactly the truncated zeta(s - k + 1) factor
    assert report.rhs_corrected / report.rhs_printed == pytest.approx(
        float(mpmath.fprod(1 / (1 - mpmath.mpf(p) ** (12 - 20 - 1)) for p in primes_up_to(200))), rel=1e-14)


def test_standard_identity_truncation(delta_ap):
    diffs = []
    for p_max in (25, 50, 100, 200):
        r = remark_standard_identity_check(delta_ap, 12, 16, p_max, 10 * p_max)
        assert r.corrected_difference <= r.tail_bound
        diffs.append(r.corrected_difference)
    assert all(diffs[i + 1] < diffs[i] for i in range(3))


def test_standard_identity_zero_form():
    r = remark_standard_identity_check({p: 0 for p in primes_up_to(100)}, 12, 20, 50, 100)
    assert r.lhs == 0 and r.rhs_printed == 0 and r.rhs_corrected == 0


def test_standard_identity_requires_margin(delta_ap):
    with pytest.raises(PreconditionError):
        remark_standard_identity_check(delta_ap, 12, 13, 50, 100)
