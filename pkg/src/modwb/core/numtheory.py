"""Small exact number-theory helpers shared by every module."""

from fractions import Fraction
from functools import lru_cache
from math import isqrt

import gmpy2
import sympy
from sympy.ntheory import factorint

__all__ = [
    "bernoulli",
    "divisor_sigma_table",
    "factorint",
    "fundamental_split",
    "is_prime",
    "is_square",
    "kronecker",
    "mobius",
    "primes_up_to",
    "rational_str",
    "parse_rational",
    "valuation",
]


def is_prime(n):
    return n >= 2 and bool(gmpy2.is_prime(n))


def mobius(n):
    exps = factorint(n).values()
    if any(e > 1 for e in exps):
        return 0
    return -1 if len(exps) % 2 else 1


def primes_up_to(bound):
    """Primes p <= bound in increasing order."""
    return [int(p) for p in sympy.primerange(2, bound + 1)]


@lru_cache(maxsize=None)
def bernoulli(n):
    """Bernoulli number B_n with the convention B_1 = -1/2."""
    if n == 1:
        return Fraction(-1, 2)
    b = sympy.bernoulli(n)
    return Fraction(int(b.p), int(b.q))


def divisor_sigma_table(n_max, power):
    """List s with s[n] = sum_{d | n} d**power for 1 <= n <= n_max (s[0] = 0)."""
    s = [0] * (n_max + 1)
    for d in range(1, n_max + 1):
        dp = d**power
        for m in range(d, n_max + 1, d):
            s[m] += dp
    return s


def valuation(n, p):
    if n == 0:
        raise ValueError("valuation of 0")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def is_square(n):
    return n >= 0 and isqrt(n) ** 2 == n


def kronecker(d, n):
    """Kronecker symbol (d/n) for n >= 1."""
    if n < 1:
        raise ValueError("kronecker symbol needs n >= 1")
    return int(gmpy2.kronecker(d, n))


def fundamental_split(n):
    """Write a discriminant n (n = 0, 1 mod 4, n != 0) as D0 * f**2 with D0 fundamental."""
    if n % 4 not in (0, 1) or n == 0:
        raise ValueError(f"{n} is not a nonzero discriminant")
    sign = -1 if n < 0 else 1
    squarefree, f = sign, 1
    for p, e in factorint(abs(n)).items():
        f *= p ** (e // 2)
        if e % 2:
            squarefree *= p
    if squarefree % 4 == 1:
        return squarefree, f
    # squarefree part is 2 or 3 mod 4: the fundamental discriminant absorbs a 4
    return 4 * squarefree, f // 2


def rational_str(x):
    """Deterministic exact string: "n" for integers, "p/q" otherwise."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(s):
    return Fraction(s)
