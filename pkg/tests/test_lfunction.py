import pytest

from modwb.core.dirichlet import dirichlet_partial
from modwb.curves import EllipticCurveQ, elliptic_local_factors, global_l_eval
from modwb.forms import lookup_newform, newform_expansion


def test_euler_product_matches_modular_dirichlet_series():
    E = EllipticCurveQ(0, -1, 1, 0, 0)
    euler = global_l_eval(elliptic_local_factors(E, 3000), 3, 3000)
    f = newform_expansion(lookup_newform(11), 3000)
    direct = dirichlet_partial(f, 3, 3000, 0.75)
    assert abs(euler.value - direct.value) <= euler.tail_bound + direct.tail_bound


def test_cross_validation_notes():
    E = EllipticCurveQ(0, -1, 1, 0, 0)
    res = global_l_eval(elliptic_local_factors(E, 500), 3, 500, cross_validate=True)
    value = complex(*res.notes["dirichlet_value"])
    assert abs(value - res.value) <= res.tail_bound + res.notes["dirichlet_tail"]


def test_tail_shrinks_with_more_primes():
    E = EllipticCurveQ(1, 0, 1, -1, 0)
    small = global_l_eval(elliptic_local_factors(E, 100), 2.5, 100)
    large = global_l_eval(elliptic_local_factors(E, 1000), 2.5, 1000)
    assert large.tail_bound < small.tail_bound
    assert abs(large.value - small.value) <= small.tail_bound + large.tail_bound
    assert large.growth_exponent == pytest.approx(0.5, abs=1e-9)
