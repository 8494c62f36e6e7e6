"""Truncated q-expansions with exact rational coefficients.

A :class:`QExpansion` of precision ``N`` knows the coefficients of
``q**0 .. q**N`` exactly and nothing beyond; reading past the precision
raises :class:`~modwb.errors.PrecisionError` instead of returning zero.

Products go through Kronecker substitution: the (integer-scaled) coefficient
vectors are packed into two big integers, multiplied with CPython's
Karatsuba multiplication and unpacked again.  That keeps a product of two
precision-2000 series well under a tenth of a second.
"""

from fractions import Fraction
from math import lcm

from ..errors import NotInvertible, PrecisionError, UnsupportedEtaQuotient

__all__ = [
    "QExpansion",
    "int_convolve",
    "series_mul",
    "series_invert",
    "euler_phi_series",
    "eta_expand",
]


def int_convolve(f, g, n_out):
    """First ``n_out`` coefficients of the product of two integer coefficient lists."""
    f = list(f[:n_out])
    g = list(g[:n_out])
    while f and f[-1] == 0:
        f.pop()
    while g and g[-1] == 0:
        g.pop()
    if not f or not g:
        return [0] * n_out
    bound = max(map(abs, f)) * max(map(abs, g)) * min(len(f), len(g))
    nbytes = (bound.bit_length() + 2 + 7) // 8
    bits = 8 * nbytes
    half = 1 << (bits - 1)

    def pack(coeffs):
        pos = b"".join((c if c > 0 else 0).to_bytes(nbytes, "little") for c in coeffs)
        neg = b"".join((-c if c < 0 else 0).to_bytes(nbytes, "little") for c in coeffs)
        return int.from_bytes(pos, "little") - int.from_bytes(neg, "little")

    m = min(len(f) + len(g) - 1, n_out)
    product = pack(f) * pack(g)
    # bias every digit by 2**(bits-1) so the signed digits become plain bytes
    bias = int.from_bytes(half.to_bytes(nbytes, "little") * m, "little")
    raw = ((product + bias) & ((1 << (bits * m)) - 1)).to_bytes(nbytes * m, "little")
    out = [
        int.from_bytes(raw[i * nbytes : (i + 1) * nbytes], "little") - half
        for i in range(m)
    ]
    return out + [0] * (n_out - m)


def _scaled(coeffs):
    den = lcm(*(c.denominator for c in coeffs)) if coeffs else 1
    return [c.numerator * (den // c.denominator) for c in coeffs], den


class QExpansion:
    """Exact truncated Fourier series ``sum a_n q^n`` for ``0 <= n <= precision``.

    ``coeffs`` may be a sequence (index = exponent) or a mapping
    ``exponent -> value``; unspecified exponents up to ``precision`` are zero.
    ``weight`` and ``level`` are optional tags carried through arithmetic.
    """

    __slots__ = ("_c", "precision", "weight", "level")

    def __init__(self, coeffs, precision=None, weight=None, level=None):
        if isinstance(coeffs, dict):
            if precision is None:
                precision = max(coeffs, default=0)
            c = [Fraction(0)] * (precision + 1)
            for n, v in coeffs.items():
                if n < 0:
                    raise ValueError("negative exponent")
                if n > precision:
                    raise ValueError(f"exponent {n} exceeds precision {precision}")
                c[n] = Fraction(v)
        else:
            c = [Fraction(v) for v in coeffs]
            if precision is None:
                precision = len(c) - 1
            if len(c) > precision + 1:
                raise ValueError(f"{len(c) - 1} exceeds precision {precision}")
            c.extend([Fraction(0)] * (precision + 1 - len(c)))
        if precision < 0:
            raise ValueError("precision must be nonnegative")
        self._c = tuple(c)
        self.precision = precision
        self.weight = weight
        self.level = level

    @classmethod
    def one(cls, precision, **tags):
        return cls([1], precision, **tags)

    @classmethod
    def zero(cls, precision, **tags):
        return cls([], precision, **tags)

    # access
    def coeff(self, n):
        if n < 0:
            return Fraction(0)
        if n > self.precision:
            raise PrecisionError(f"coefficient {n} requested, precision is {self.precision}")
        return self._c[n]

    __getitem__ = coeff

    def coefficients(self):
        """Tuple of all known coefficients, index = exponent."""
        return self._c

    def is_zero(self):
        return not any(self._c)

    def is_integral(self):
        return all(c.denominator == 1 for c in self._c)

    def valuation(self):
        for n, c in enumerate(self._c):
            if c:
                return n
        return None

    def truncate(self, precision):
        if precision > self.precision:
            raise PrecisionError(f"cannot raise precision {self.precision} to {precision}")
        return QExpansion(self._c[: precision + 1], precision, self.weight, self.level)

    def with_tags(self, weight=None, level=None):
        return QExpansion(self._c, self.precision, weight, level)

    # arithmetic
    def _tags(self, other):
        w = self.weight if self.weight == getattr(other, "weight", self.weight) else None
        lv = self.level if self.level == getattr(other, "level", self.level) else None
        return w, lv

    def __add__(self, other):
        if not isinstance(other, QExpansion):
            return self + QExpansion([other], self.precision, self.weight, self.level)
        n = min(self.precision, other.precision)
        w, lv = self._tags(other)
        return QExpansion([a + b for a, b in zip(self._c[: n + 1], other._c)], n, w, lv)

    __radd__ = __add__

    def __neg__(self):
        return QExpansion([-a for a in self._c], self.precision, self.weight, self.level)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, x):
        x = Fraction(x)
        return QExpansion([x * a for a in self._c], self.precision, self.weight, self.level)

    def __mul__(self, other):
        if not isinstance(other, QExpansion):
            return self.scale(other)
        n = min(self.precision, other.precision)
        fi, fd = _scaled(self._c[: n + 1])
        gi, gd = _scaled(other._c[: n + 1])
        prod = int_convolve(fi, gi, n + 1)
        den = fd * gd
        w = self.weight + other.weight if None not in (self.weight, other.weight) else None
        lv = lcm(self.level, other.level) if None not in (self.level, other.level) else None
        return QExpansion([Fraction(c, den) for c in prod], n, w, lv)

    def __rmul__(self, other):
        return self.scale(other)

    def __truediv__(self, x):
        return self.scale(Fraction(1) / Fraction(x))

    def __pow__(self, e):
        if e < 0:
            return series_invert(self) ** (-e)
        result = QExpansion.one(self.precision)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def dilate(self, d, precision=None):
        """Substitute q -> q**d; the result is known up to ``d * precision``."""
        out = self.precision * d if precision is None else precision
        if out > self.precision * d + d - 1:
            raise PrecisionError("dilation needs more input precision")
        c = [Fraction(0)] * (out + 1)
        for n in range(0, out // d + 1):
            c[n * d] = self._c[n]
        return QExpansion(c, out)

    def shift(self, m):
        """Multiply by q**m (m >= 0); precision grows by m."""
        return QExpansion([Fraction(0)] * m + list(self._c), self.precision + m)

    def __eq__(self, other):
        if not isinstance(other, QExpansion):
            return NotImplemented
        return self.precision == other.precision and self._c == other._c

    def __hash__(self):
        return hash((self.precision, self._c))

    def agrees_with(self, other):
        """Exact equality on the common range of known coefficients."""
        n = min(self.precision, other.precision)
        return self._c[: n + 1] == other._c[: n + 1]

    def __repr__(self):
        terms = []
        for n, c in enumerate(self._c[:8]):
            if c:
                terms.append(f"{c}*q^{n}" if n else f"{c}")
        body = " + ".join(terms) or "0"
        return f"QExpansion({body} + O(q^{self.precision + 1}))"


def series_mul(f, g):
    return f * g


def series_invert(f):
    """Multiplicative inverse up to the precision of ``f`` (Newton iteration)."""
    c0 = f.coeff(0)
    if c0 == 0:
        raise NotInvertible("constant term is zero")
    inv = QExpansion([1 / c0], 0)
    known = 0
    while known < f.precision:
        known = min(2 * known + 1, f.precision)
        fk = f.truncate(known)
        inv = QExpansion(list(inv.coefficients()), known)
        inv = inv * (2 - fk * inv)
    return QExpansion(inv.coefficients(), f.precision, f.weight, f.level)


def euler_phi_series(precision):
    """prod_{n>=1} (1 - q^n) via the pentagonal number theorem."""
    c = [0] * (precision + 1)
    k = 0
    while True:
        any_in_range = False
        for j in ((k, -k) if k else (0,)):
            e = j * (3 * j - 1) // 2
            if e <= precision:
                c[e] += -1 if j % 2 else 1
                any_in_range = True
        if not any_in_range:
            break
        k += 1
    return QExpansion(c, precision)


def eta_expand(quotient, precision):
    """Expand prod_d eta(d tau)^{r_d} as an integral q-series up to ``precision``.

    ``quotient`` is a list of pairs ``(d, r_d)``.  The total q-shift
    ``sum d r_d / 24`` must be a nonnegative integer.
    """
    total = sum(d * r for d, r in quotient)
    if total % 24:
        raise UnsupportedEtaQuotient(f"sum d*r_d = {total} is not divisible by 24")
    shift = total // 24
    if shift < 0:
        raise UnsupportedEtaQuotient("negative leading exponent (Laurent series)")
    weight = Fraction(sum(r for _, r in quotient), 2)
    inner = max(precision - shift, 0)
    result = QExpansion.one(inner)
    for d, r in quotient:
        if d <= 0:
            raise UnsupportedEtaQuotient(f"bad eta argument d={d}")
        if r == 0:
            continue
        base = euler_phi_series(inner // d).dilate(d, inner)
        result = result * base**r
    out = result.shift(shift).truncate(precision) if precision >= shift else QExpansion.zero(precision)
    w = int(weight) if weight.denominator == 1 else None
    return out.with_tags(weight=w)
