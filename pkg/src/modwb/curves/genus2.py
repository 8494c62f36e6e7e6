"""Genus-2 curves y^2 = f(x): point counts over F_p, F_{p^2} and Frobenius polynomials."""

from dataclasses import dataclass
from functools import cached_property

import mpmath
import numpy as np
import sympy

from ..core.numtheory import is_prime
from ..core.polynomial import LocalFactor, Polynomial
from ..errors import BadReduction, InconsistentCounts, Unsupported

__all__ = [
    "FrobeniusPoly",
    "Genus2CurveQ",
    "abelian_local_lfactor",
    "frobenius_poly",
    "genus2_counts",
    "root_modulus_defect",
]


@dataclass(frozen=True)
class Genus2CurveQ:
    """y^2 = f(x) with f of degree 5 or 6; ``f`` lists coefficients from x^0 upwards."""

    f: tuple

    def __post_init__(self):
        f = tuple(int(c) for c in self.f)
        while f and f[-1] == 0:
            f = f[:-1]
        object.__setattr__(self, "f", f)
        if len(f) - 1 not in (5, 6):
            raise ValueError(f"f must have degree 5 or 6, got {len(f) - 1}")
        if self.discriminant == 0:
            raise ValueError("f is not squarefree")

    @property
    def degree(self):
        return len(self.f) - 1

    @property
    def leading(self):
        return self.f[-1]

    @cached_property
    def discriminant(self):
        x = sympy.Symbol("x")
        return int(sympy.discriminant(sum(c * x**i for i, c in enumerate(self.f)), x))

    def is_good(self, p):
        return p % 2 == 1 and self.leading % p != 0 and self.discriminant % p != 0


def _nonsquare(p):
    squares = {(x * x) % p for x in range(1, p)}
    return next(n for n in range(2, p) if n not in squares)


def _legendre_table(p):
    chi = -np.ones(p, dtype=np.int64)
    x = np.arange(1, p, dtype=np.int64)
    chi[(x * x) % p] = 1
    chi[0] = 0
    return chi


def genus2_counts(C, p):
    """(#C(F_p), #C(F_{p^2})) for the smooth projective model at an odd good prime."""
    if p == 2:
        raise Unsupported("p = 2 is not supported for y^2 = f(x)")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if not C.is_good(p):
        raise BadReduction(f"p={p} is a bad prime for y^2 = f(x)")
    chi = _legendre_table(p)
    coeffs = [c % p for c in C.f]

    x = np.arange(p, dtype=np.int64)
    v = np.zeros(p, dtype=np.int64)
    for c in reversed(coeffs):
        v = (v * x + c) % p
    lc_square = chi[C.leading % p] == 1
    inf1 = 1 if C.degree == 5 else (2 if lc_square else 0)
    n1 = int(p + chi[v].sum()) + inf1

    # F_{p^2} = F_p[w] / (w^2 - n); z is a square iff its norm is a square in F_p
    n = _nonsquare(p)
    a = np.repeat(np.arange(p, dtype=np.int64), p)
    b = np.tile(np.arange(p, dtype=np.int64), p)
    u = np.zeros(p * p, dtype=np.int64)
    w = np.zeros(p * p, dtype=np.int64)
    for c in reversed(coeffs):
        u, w = (u * a + n * ((w * b) % p) + c) % p, (u * b + w * a) % p
    norm = (u * u - n * ((w * w) % p)) % p
    inf2 = 1 if C.degree == 5 else 2
    n2 = int(p * p + chi[norm].sum()) + inf2
    return n1, n2


@dataclass(frozen=True)
class FrobeniusPoly:
    """det(1 - Frob_p t) on the Tate module: degree 2g, constant term 1."""

    p: int
    g: int
    poly: Polynomial

    def __post_init__(self):
        if self.poly.degree != 2 * self.g or self.poly[0] != 1:
            raise ValueError("Frobenius polynomial must have degree 2g and constant term 1")
        if not self.weil_symmetric():
            raise ValueError(f"Weil symmetry fails for {self.poly}")

    def weil_symmetric(self):
        p, g = self.p, self.g
        return all(self.poly[2 * g - i] == p ** (g - i) * self.poly[i] for i in range(g + 1))

    @property
    def coeffs(self):
        return [int(c) for c in self.poly.coeffs]

    @property
    def trace(self):
        return -self.poly[1]

    @property
    def det(self):
        return self.poly[2 * self.g]

    def inverse_roots(self, dps=30):
        """Frobenius eigenvalues alpha_i (P(t) = prod (1 - alpha_i t))."""
        return self.poly.reciprocal().roots(dps)

    def root_moduli(self, dps=30):
        return [abs(a) for a in self.inverse_roots(dps)]

    def power_sums(self, n_max):
        """s_n = sum alpha_i^n for 1 <= n <= n_max via Newton's identities."""
        e = [(-1) ** i * self.poly[i] for i in range(2 * self.g + 1)]
        s = []
        for n in range(1, n_max + 1):
            acc = (-1) ** (n - 1) * n * (e[n] if n <= 2 * self.g else 0)
            for i in range(1, n):
                if i <= 2 * self.g:
                    acc += (-1) ** (i - 1) * e[i] * s[n - i - 1]
            s.append(acc)
        return s

    def point_count(self, n):
        """#C(F_{p^n}) = p^n + 1 - s_n."""
        return self.p**n + 1 - self.power_sums(n)[-1]

    def to_json(self):
        return {"p": self.p, "g": self.g, "coeffs": self.coeffs}

    @classmethod
    def from_json(cls, data):
        return cls(int(data["p"]), int(data["g"]), Polynomial(int(c) for c in data["coeffs"]))


def frobenius_poly(n1, n2, p, g=2):
    """Frobenius polynomial from point counts (n2 is ignored for g = 1)."""
    c1 = n1 - (p + 1)
    if g == 1:
        return FrobeniusPoly(p, 1, Polynomial([1, c1, p]))
    if g != 2:
        raise Unsupported("only g = 1, 2 are supported")
    twice_c2 = n2 - (p * p + 1) + c1 * c1
    if twice_c2 % 2:
        raise InconsistentCounts(f"N1={n1}, N2={n2} give a non-integral c2 at p={p}")
    c2 = twice_c2 // 2
    return FrobeniusPoly(p, 2, Polynomial([1, c1, c2, p * c1, p * p]))


def abelian_local_lfactor(P):
    return LocalFactor(P.p, P.poly, "frobenius")


def root_modulus_defect(P, dps=30):
    """max_i | |alpha_i| - sqrt(p) |."""
    with mpmath.workdps(dps):
        target = mpmath.sqrt(P.p)
        return max(abs(m - target) for m in P.root_moduli(dps))
