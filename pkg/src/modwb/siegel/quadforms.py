"""Binary half-integral matrices T = (a, b/2; b/2, c): reduction and automorphs."""

import math
from dataclasses import dataclass
from fractions import Fraction

from ..errors import NotPositiveDefinite

__all__ = [
    "HalfIntegralMatrix",
    "epsilon_units",
    "reduce_class",
    "reduced_classes",
]


@dataclass(frozen=True, order=True)
class HalfIntegralMatrix:
    a: int
    b: int
    c: int

    @property
    def disc(self):
        """4ac - b^2, i.e. 4 det T."""
        return 4 * self.a * self.c - self.b * self.b

    @property
    def det(self):
        return Fraction(self.disc, 4)

    @property
    def content(self):
        return math.gcd(self.a, self.b, self.c)

    @property
    def trace(self):
        return self.a + self.c

    def is_semipositive(self):
        return self.a >= 0 and self.c >= 0 and self.disc >= 0

    def is_positive(self):
        return self.a > 0 and self.disc > 0

    def is_reduced(self):
        return 0 <= self.b <= self.a <= self.c

    def value(self, x, y):
        return self.a * x * x + self.b * x * y + self.c * y * y

    def transform(self, U):
        """T[U] = U^T T U."""
        (p, q), (r, s) = U
        return HalfIntegralMatrix(
            self.value(p, r),
            2 * self.a * p * q + self.b * (p * s + q * r) + 2 * self.c * r * s,
            self.value(q, s),
        )

    def as_tuple(self):
        return (self.a, self.b, self.c)


def _mul(U, V):
    return ((U[0][0] * V[0][0] + U[0][1] * V[1][0], U[0][0] * V[0][1] + U[0][1] * V[1][1]),
            (U[1][0] * V[0][0] + U[1][1] * V[1][0], U[1][0] * V[0][1] + U[1][1] * V[1][1]))


def reduce_class(T):
    """GL_2(Z)-reduced representative T' = T[U] with 0 <= b <= a <= c, and U."""
    if not isinstance(T, HalfIntegralMatrix):
        T = HalfIntegralMatrix(*T)
    if not T.is_positive():
        raise NotPositiveDefinite(f"{T.as_tuple()} is not positive definite")
    a, b, c = T.as_tuple()
    U = ((1, 0), (0, 1))
    while True:
        if abs(b) > a:
            # x -> x - n y brings |b| <= a
            n = (b + a) // (2 * a)
            b, c = b - 2 * n * a, a * n * n - b * n + c
            U = _mul(U, ((1, -n), (0, 1)))
        elif a > c:
            a, c = c, a
            U = _mul(U, ((0, 1), (1, 0)))
        else:
            break
    if b < 0:
        b = -b
        U = _mul(U, ((1, 0), (0, -1)))
    return HalfIntegralMatrix(a, b, c), U


def _representations(T, m):
    """All (x, y) with a x^2 + b x y + c y^2 = m."""
    a, b, c = T.as_tuple()
    D = T.disc
    # 4a m = (2a x + b y)^2 + D y^2 and 4c m = (2c y + b x)^2 + D x^2
    ymax = math.isqrt(4 * a * m // D)
    xmax = math.isqrt(4 * c * m // D)
    return [(x, y) for x in range(-xmax, xmax + 1) for y in range(-ymax, ymax + 1) if T.value(x, y) == m]


def epsilon_units(T):
    """Number of U in GL_2(Z) with U^T T U = T, by exhaustive enumeration."""
    if not isinstance(T, HalfIntegralMatrix):
        T = HalfIntegralMatrix(*T)
    if not T.is_positive():
        raise NotPositiveDefinite(f"{T.as_tuple()} is not positive definite")
    cols1 = _representations(T, T.a)
    cols2 = _representations(T, T.c)
    count = 0
    for p, r in cols1:
        for q, s in cols2:
            if abs(p * s - q * r) == 1 and T.transform(((p, q), (r, s))) == T:
                count += 1
    return count


def reduced_classes(disc_bound):
    """Reduced positive classes (a, b, c) with 4ac - b^2 <= disc_bound, sorted."""
    out = []
    a = 1
    while 3 * a * a <= disc_bound:
        for b in range(a + 1):
            c = a
            while 4 * a * c - b * b <= disc_bound:
                out.append(HalfIntegralMatrix(a, b, c))
                c += 1
        a += 1
    return sorted(out, key=lambda t: (t.disc, t.as_tuple()))
