"""Dense univariate polynomials in ``t`` and local factors attached to primes.

Coefficients are stored in ascending degree.  Exact polynomials hold
``Fraction`` coefficients; numeric ones (built from Satake parameters) hold
mpmath or Python complex numbers and can be rounded back with
:meth:`Polynomial.rationalize`.
"""

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

import mpmath

from .numtheory import parse_rational, rational_str

__all__ = ["Polynomial", "LocalFactor", "to_fraction"]


def _coerce(c):
    if isinstance(c, Rational):
        return Fraction(c)
    return c


def to_fraction(x):
    """Exact Fraction for an mpmath real, float or rational."""
    if isinstance(x, Rational):
        return Fraction(x)
    if isinstance(x, mpmath.mpf):
        if not mpmath.isfinite(x):
            raise ValueError(f"cannot convert {x} to a Fraction")
        sign, man, exp, _ = x._mpf_
        man = -int(man) if sign else int(man)
        return Fraction(man * 2**exp) if exp >= 0 else Fraction(man, 2 ** (-exp))
    return Fraction(x)


class Polynomial:
    __slots__ = ("_c",)

    def __init__(self, coeffs=()):
        c = [_coerce(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self._c = tuple(c)

    @classmethod
    def t(cls):
        return cls([0, 1])

    @property
    def coeffs(self):
        return self._c

    @property
    def degree(self):
        return len(self._c) - 1  # -1 for the zero polynomial

    def __getitem__(self, i):
        return self._c[i] if 0 <= i < len(self._c) else Fraction(0)

    def is_exact(self):
        return all(isinstance(c, Fraction) for c in self._c)

    def __call__(self, x):
        acc = 0
        for c in reversed(self._c):
            acc = acc * x + c
        return acc

    def __add__(self, other):
        other = other if isinstance(other, Polynomial) else Polynomial([other])
        n = max(len(self._c), len(other._c))
        return Polynomial([self[i] + other[i] for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return Polynomial([-c for c in self._c])

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return Polynomial([c * other for c in self._c])
        if not self._c or not other._c:
            return Polynomial()
        out = [0] * (len(self._c) + len(other._c) - 1)
        for i, a in enumerate(self._c):
            for j, b in enumerate(other._c):
                out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e):
        result = Polynomial([1])
        for _ in range(e):
            result = result * self
        return result

    def __divmod__(self, other):
        if not other._c:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self._c)
        lead = other._c[-1]
        q = [Fraction(0)] * max(len(rem) - len(other._c) + 1, 0)
        for i in range(len(q) - 1, -1, -1):
            coef = rem[i + len(other._c) - 1] / lead
            q[i] = coef
            for j, b in enumerate(other._c):
                rem[i + j] -= coef * b
        return Polynomial(q), Polynomial(rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self._c == other._c
        return NotImplemented

    def __hash__(self):
        return hash(self._c)

    def reciprocal(self):
        """t**deg * P(1/t)."""
        return Polynomial(reversed(self._c))

    def roots(self, dps=30):
        """Numeric complex roots (mpmath) at ``dps`` decimal digits."""
        if self.degree < 1:
            return []
        with mpmath.workdps(dps):
            coeffs = [mpmath.mpmathify(c if not isinstance(c, Fraction) else mpmath.mpf(c.numerator) / c.denominator)
                      for c in reversed(self._c)]
            return list(mpmath.polyroots(coeffs, maxsteps=200, extraprec=4 * dps))

    def rationalize(self, max_den=10**6, rel_tol=1e-9, scale=None):
        """Round numeric coefficients to nearby rationals.

        Each coefficient must be real to within ``rel_tol`` of its scale and
        must land within ``rel_tol * scale`` of the rational chosen.
        ``scale`` may be a list of per-coefficient magnitudes.
        """
        out = []
        for i, c in enumerate(self._c):
            if isinstance(c, Fraction):
                out.append(c)
                continue
            c = mpmath.mpmathify(c)
            s = max(1, abs(c)) if scale is None else max(1, scale[i])
            if abs(mpmath.im(c)) > rel_tol * s:
                raise ValueError(f"coefficient {i} is not real: {c}")
            x = to_fraction(mpmath.re(c)).limit_denominator(max_den)
            if abs(mpmath.re(c) - mpmath.mpf(x.numerator) / x.denominator) > rel_tol * s:
                raise ValueError(f"coefficient {i} = {c} is not close to a rational")
            out.append(x)
        return Polynomial(out)

    def as_strings(self):
        return [rational_str(c) for c in self._c]

    @classmethod
    def from_strings(cls, items):
        return cls(parse_rational(s) for s in items)

    def __repr__(self):
        return f"Polynomial({list(map(str, self._c))})"


@dataclass(frozen=True)
class LocalFactor:
    """Denominator polynomial of an Euler factor: the factor is ``poly(p**-s)**-1``."""

    p: int
    poly: Polynomial
    kind: str = "frobenius"

    def to_json(self):
        return {"p": self.p, "kind": self.kind, "coeffs": self.poly.as_strings()}

    @classmethod
    def from_json(cls, data):
        return cls(int(data["p"]), Polynomial.from_strings(data["coeffs"]), data.get("kind", "frobenius"))
