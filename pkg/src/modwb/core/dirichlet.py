"""Numeric evaluation of truncated Dirichlet series and Euler products.

Both evaluators return a :class:`DirichletEval` that carries an explicit
truncation bound together with the growth assumption it was derived from.
"""

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction

import mpmath

from ..errors import DivergenceRisk, PoleAtPrime, PreconditionError
from .numtheory import factorint, primes_up_to
from .polynomial import LocalFactor
from .series import QExpansion

__all__ = [
    "DirichletEval",
    "dirichlet_partial",
    "euler_product",
    "euler_coefficients",
    "root_growth_exponent",
]


@dataclass(frozen=True)
class DirichletEval:
    s: complex
    terms_used: int
    value: complex
    tail_bound: float
    growth_exponent: float = 0.0
    growth_constant: float = 0.0
    notes: dict = field(default_factory=dict, compare=False)

    def to_json(self):
        return {
            "s": [self.s.real, self.s.imag],
            "terms_used": self.terms_used,
            "value": [self.value.real, self.value.imag],
            "tail_bound": self.tail_bound,
            "growth_exponent": self.growth_exponent,
            "growth_constant": self.growth_constant,
            "notes": self.notes,
        }


def _coefficient_getter(coeffs):
    if isinstance(coeffs, QExpansion):
        return coeffs.coeff
    if hasattr(coeffs, "expansion"):
        return coeffs.expansion.coeff
    return lambda n: coeffs.get(n, 0)


def dirichlet_partial(coeffs, s, n_max, growth_exponent, growth_constant=None):
    """Partial sum ``sum_{n <= n_max} a_n n^{-s}`` with an integral-test tail bound.

    The tail bound assumes ``|a_n| <= C n^growth_exponent`` for all n.  When
    ``growth_constant`` is omitted, C is the empirical maximum of
    ``|a_n| / n^growth_exponent`` over the summed range; that choice is
    recorded in ``notes``.
    """
    s = complex(s)
    sigma = s.real
    if sigma <= growth_exponent + 1:
        raise DivergenceRisk(f"Re(s) = {sigma} must exceed growth exponent + 1 = {growth_exponent + 1}")
    get = _coefficient_getter(coeffs)
    total = 0j
    c_emp = 0.0
    for n in range(1, n_max + 1):
        a = get(n)
        if a:
            a = float(a)
            total += a * cmath.exp(-s * math.log(n))
            c_emp = max(c_emp, abs(a) / n**growth_exponent)
    notes = {}
    if growth_constant is None:
        growth_constant = c_emp
        notes["growth_constant"] = "empirical max over summed range"
    tail = growth_constant * n_max ** (growth_exponent - sigma + 1) / (sigma - growth_exponent - 1)
    return DirichletEval(s, n_max, total, tail, growth_exponent, growth_constant, notes)


def _as_poly(f):
    return f.poly if isinstance(f, LocalFactor) else f


def root_growth_exponent(factors):
    """Largest w with |beta| = p^w over inverse roots beta of the local polynomials."""
    w = -math.inf
    for p, f in factors.items():
        poly = _as_poly(f)
        for r in poly.roots(dps=20):
            if r != 0:
                w = max(w, -float(mpmath.log(abs(r))) / math.log(p))
    return w


def euler_product(factors, s, p_max, growth_exponent=None):
    """Truncated Euler product ``prod_{p <= p_max} poly_p(p^{-s})^{-1}``.

    ``factors`` maps primes to :class:`Polynomial` or :class:`LocalFactor`;
    primes missing from the map contribute 1.  The tail bound assumes every
    inverse root at p > p_max has modulus at most p^w, where w is measured
    from the supplied factors unless ``growth_exponent`` is given.
    """
    s = complex(s)
    sigma = s.real
    used = {p: _as_poly(f) for p, f in factors.items() if p <= p_max}
    value = 1 + 0j
    for p in sorted(used):
        poly = used[p]
        x = cmath.exp(-s * math.log(p))
        v = complex(poly(x))
        size = sum(abs(complex(c)) * abs(x) ** i for i, c in enumerate(poly.coeffs))
        if v == 0 or abs(v) < 1e-14 * size:
            raise PoleAtPrime(f"local polynomial vanishes at p={p}, s={s}")
        value /= v
    deg = max((poly.degree for poly in used.values()), default=0)
    w = root_growth_exponent(used) if growth_exponent is None else growth_exponent
    notes = {"convergence": f"Re(s) > {w + 1:.6g}", "growth_constant": "max local degree"}
    if deg <= 0 or w == -math.inf:
        return DirichletEval(s, len(used), value, 0.0, 0.0, 0.0, notes)
    if sigma <= w + 1:
        raise DivergenceRisk(f"Re(s) = {sigma} outside the half-plane Re(s) > {w + 1:.6g}")
    r = p_max ** (w - sigma)
    log_tail = deg * p_max ** (w - sigma + 1) / ((sigma - w - 1) * (1 - r))
    tail = abs(value) * math.expm1(log_tail)
    return DirichletEval(s, len(used), value, tail, w, float(deg), notes)


def euler_coefficients(factors, n_max):
    """Dirichlet coefficients a_1..a_{n_max} of ``prod_p poly_p(p^{-s})^{-1}`` (exact)."""
    prime_powers = {}
    for p in primes_up_to(n_max):
        if p not in factors:
            raise PreconditionError(f"no local factor for p={p}")
        poly = _as_poly(factors[p])
        if poly[0] != 1:
            raise PreconditionError(f"local factor at p={p} must have constant term 1")
        e_max = int(math.log(n_max, p) + 1e-9)
        while p ** (e_max + 1) <= n_max:
            e_max += 1
        # power series inverse of poly(t) up to t^e_max
        inv = [Fraction(1)]
        for e in range(1, e_max + 1):
            inv.append(-sum(Fraction(poly[j]) * inv[e - j] for j in range(1, min(e, poly.degree) + 1)))
        prime_powers[p] = inv
    out = {}
    for n in range(1, n_max + 1):
        a = Fraction(1)
        for p, e in factorint(n).items():
            a *= prime_powers[p][e]
        out[n] = a
    return out
