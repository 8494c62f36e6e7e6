"""Global L-functions assembled from local factors."""

from ..core.dirichlet import dirichlet_partial, euler_coefficients, euler_product
from ..core.numtheory import primes_up_to
from .elliptic import ec_local_factor

__all__ = ["elliptic_local_factors", "global_l_eval"]


def elliptic_local_factors(E, p_max):
    return {p: ec_local_factor(E, p) for p in primes_up_to(p_max)}


def global_l_eval(factors, s, p_max, cross_validate=False):
    """Truncated Euler product of L(s) over p <= p_max.

    With ``cross_validate`` the product is also expanded into Dirichlet
    coefficients up to n = p_max and summed directly; both values and their
    tails land in ``notes`` under ``dirichlet_value`` / ``dirichlet_tail``.
    """
    result = euler_product(factors, s, p_max)
    if not cross_validate:
        return result
    coeffs = euler_coefficients(factors, p_max)
    # divisor-function allowance of 1/4 on top of the root exponent
    growth = max(result.growth_exponent, 0.0) + 0.25
    direct = dirichlet_partial(coeffs, s, p_max, growth)
    result.notes.update(
        dirichlet_value=[direct.value.real, direct.value.imag],
        dirichlet_tail=direct.tail_bound,
        dirichlet_growth_exponent=growth,
    )
    return result
