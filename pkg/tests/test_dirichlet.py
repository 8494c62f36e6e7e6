import math

import mpmath
import pytest

from modwb.core.dirichlet import dirichlet_partial, euler_coefficients, euler_product, root_growth_exponent
from modwb.core.numtheory import primes_up_to
from modwb.core.polynomial import Polynomial
from modwb.errors import DivergenceRisk, PoleAtPrime


def zeta_factors(bound):
    return {p: Polynomial([1, -1]) for p in primes_up_to(bound)}


def test_partial_zeta_against_mpmath():
    res = dirichlet_partial({n: 1 for n in range(1, 2001)}, 3, 2000, 0.0, growth_constant=1.0)
    exact = float(mpmath.zeta(3))
    assert abs(res.value - exact) <= res.tail_bound
    assert res.tail_bound < 1e-6


def test_partial_requires_convergence():
    with pytest.raises(DivergenceRisk):
        dirichlet_partial({1: 1}, 1.0, 10, 0.0)


def test_euler_product_of_zeta():
    res = euler_product(zeta_factors(1000), 3, 1000)
    assert abs(res.value - float(mpmath.zeta(3))) <= res.tail_bound
    assert res.growth_exponent == pytest.approx(0.0, abs=1e-12)


def test_single_factor():
    res = euler_product({2: Polynomial([1, -1])}, 2, 10)
    assert res.value == pytest.approx(1 / (1 - 2**-2))


def test_pole_detected():
    with pytest.raises(PoleAtPrime):
        euler_product({2: Polynomial([1, -4])}, 2, 10)


def test_euler_coefficients_of_zeta_squared():
    factors = {p: Polynomial([1, -2, 1]) for p in primes_up_to(50)}
    coeffs = euler_coefficients(factors, 50)
    for n in range(1, 51):
        assert coeffs[n] == sum(1 for d in range(1, n + 1) if n % d == 0)


def test_root_growth_exponent():
    # 1 - a t + p t^2 with |roots| = sqrt(p)
    assert root_growth_exponent({5: Polynomial([1, -2, 5])}) == pytest.approx(0.5)
    assert math.isinf(root_growth_exponent({}))
