"""Cohen's numbers H(r, N) and index-one Jacobi forms by theta-decomposition coefficients.

An index-one Jacobi form of even weight is determined by c(D), D = 4n - r^2,
the coefficient of q^n zeta^r.  Tables here are maps D -> Fraction.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from .. import cache
from ..core.numtheory import bernoulli, factorint, fundamental_split, kronecker, mobius
from ..errors import UnsupportedWeight
from ..forms import eisenstein_qexp

__all__ = [
    "JacobiEisensteinTable",
    "cohen_h",
    "jacobi_cusp_form",
    "jacobi_eisenstein",
]


@lru_cache(maxsize=None)
def _char_l_value(r, d0):
    """L(1 - r, chi_{d0}) for a fundamental discriminant d0."""
    if d0 == 1:
        return -bernoulli(r) / r
    f = abs(d0)
    # B_{r,chi} = f^{r-1} sum_a chi(a) B_r(a/f); expand B_r(x) and use integer power sums
    chi = [0] + [kronecker(d0, a) for a in range(1, f + 1)]
    power_sums = [sum(chi[a] * a**m for a in range(1, f + 1)) for m in range(r + 1)]
    total = sum(comb(r, j) * bernoulli(j) * f**j * power_sums[r - j] for j in range(r + 1))
    b_gen = Fraction(total, f)
    return -b_gen / r


def _sigma(n, power):
    return sum(d**power for d in _divisors(n))


def _divisors(n):
    divs = [1]
    for p, e in factorint(n).items():
        divs = [d * p**i for d in divs for i in range(e + 1)]
    return divs


@lru_cache(maxsize=None)
def cohen_h(r, n):
    """Cohen's H(r, n); H(1, n) is the Hurwitz class number."""
    if r < 1:
        raise ValueError("r must be positive")
    if n < 0:
        return Fraction(0)
    if n == 0:
        return -bernoulli(2 * r) / (2 * r)
    disc = (-1) ** r * n
    if disc % 4 not in (0, 1):
        return Fraction(0)
    d0, f = fundamental_split(disc)
    weight = sum(mobius(d) * kronecker(d0, d) * d ** (r - 1) * _sigma(f // d, 2 * r - 1)
                 for d in _divisors(f))
    return _char_l_value(r, d0) * weight


@dataclass(frozen=True)
class JacobiEisensteinTable:
    """c_k(D) for 0 <= D <= d_max; D < 0 and D = 1, 2 mod 4 give 0."""

    k: int
    d_max: int
    values: tuple

    def __getitem__(self, D):
        if D < 0 or D % 4 in (1, 2):
            return Fraction(0)
        if D > self.d_max:
            raise IndexError(f"D={D} beyond table bound {self.d_max}")
        return self.values[D]

    def as_dict(self):
        return {D: v for D, v in enumerate(self.values) if v}


def _table_encode(values):
    return [str(v) for v in values]


def _table_decode(items):
    return tuple(Fraction(v) for v in items)


def jacobi_eisenstein(k, d_max):
    """Coefficients of E_{k,1}: c_k(D) = H(k-1, D) / H(k-1, 0)."""
    if k % 2 or k < 4:
        raise UnsupportedWeight(f"E_(k,1) needs even k >= 4, got {k}")

    def compute():
        h0 = cohen_h(k - 1, 0)
        return tuple(cohen_h(k - 1, D) / h0 for D in range(d_max + 1))

    values = cache.cached(["jacobi_eisenstein", k, d_max], compute, _table_encode, _table_decode)
    return JacobiEisensteinTable(k, d_max, values)


def _times_elliptic(elliptic, table, d_max):
    """c(D) of f(tau) * phi(tau, z): sum_m b(m) c_phi(D - 4m)."""
    out = [Fraction(0)] * (d_max + 1)
    for D in range(d_max + 1):
        if D % 4 in (1, 2):
            continue
        out[D] = sum(elliptic[m] * table[D - 4 * m] for m in range(D // 4 + 1))
    return out


def jacobi_cusp_form(k, d_max):
    """The index-one Jacobi cusp form of weight 10 or 12, normalized so c(3) = 1."""
    if k not in (10, 12):
        raise UnsupportedWeight(f"only weights 10 and 12 have a one-dimensional cusp space here, got {k}")
    qprec = d_max // 4 + 1
    e41 = jacobi_eisenstein(4, d_max)
    e61 = jacobi_eisenstein(6, d_max)
    e4 = eisenstein_qexp(4, qprec).expansion.coefficients()
    e6 = eisenstein_qexp(6, qprec).expansion.coefficients()
    if k == 10:
        left, right = _times_elliptic(e6, e41, d_max), _times_elliptic(e4, e61, d_max)
    else:
        e4sq = [sum(e4[i] * e4[m - i] for i in range(m + 1)) for m in range(qprec + 1)]
        left, right = _times_elliptic(e4sq, e41, d_max), _times_elliptic(e6, e61, d_max)
    raw = [x - y for x, y in zip(left, right)]
    if raw[0] != 0:
        raise ArithmeticError("Jacobi combination is not cuspidal")
    scale = raw[3]
    return {D: v / scale for D, v in enumerate(raw) if v}

