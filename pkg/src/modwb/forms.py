"""Classical (degree one) modular forms on q-expansions.

Eisenstein series, the discriminant function, weight-2 eta-quotient newforms,
the Hecke operators T_p acting on Fourier coefficients, eigenform checks and
the multiplicative rebuild of coefficients from Hecke eigenvalues.
"""

import json
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources

from .core.numtheory import bernoulli, divisor_sigma_table, factorint, is_prime, primes_up_to
from .core.series import QExpansion, eta_expand
from .errors import (
    BadPrimeForLevel,
    IncompleteEigenData,
    NotAnEigenvector,
    NotNormalized,
    PrecisionExhausted,
    UnsupportedEtaQuotient,
    UnsupportedWeight,
)

__all__ = [
    "ClassicalForm",
    "NewformRecord",
    "coeffs_from_eigenvalues",
    "delta_qexp",
    "eigenvalue_check",
    "eisenstein_qexp",
    "hecke_tp",
    "lookup_newform",
    "newform_expansion",
    "registry_newforms",
]


@dataclass(frozen=True)
class ClassicalForm:
    expansion: QExpansion
    weight: int
    level: int = 1
    is_cusp: bool = False

    def __post_init__(self):
        if self.is_cusp and self.expansion.coeff(0) != 0:
            raise ValueError("a cusp form has zero constant term")
        if self.level < 1:
            raise ValueError("level must be positive")

    @property
    def precision(self):
        return self.expansion.precision

    def coeff(self, n):
        return self.expansion.coeff(n)

    __getitem__ = coeff

    def is_zero(self):
        return self.expansion.is_zero()

    def _check_compatible(self, other):
        if (self.weight, self.level) != (other.weight, other.level):
            raise ValueError("forms of different weight or level")

    def __add__(self, other):
        self._check_compatible(other)
        return ClassicalForm(self.expansion + other.expansion, self.weight, self.level,
                             self.is_cusp and other.is_cusp)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, x):
        return ClassicalForm(self.expansion.scale(x), self.weight, self.level, self.is_cusp)

    def __eq__(self, other):
        if not isinstance(other, ClassicalForm):
            return NotImplemented
        return (self.weight, self.level, self.expansion) == (other.weight, other.level, other.expansion)

    def __hash__(self):
        return hash((self.weight, self.level, self.expansion))


@dataclass(frozen=True)
class NewformRecord:
    label: str
    level: int
    eta_spec: tuple
    curve: tuple
    citation: str = ""

    def __post_init__(self):
        if sum(r for _, r in self.eta_spec) != 4:
            raise UnsupportedEtaQuotient(f"{self.label}: eta quotient is not of weight 2")
        if sum(d * r for d, r in self.eta_spec) % 24:
            raise UnsupportedEtaQuotient(f"{self.label}: non-integral q-shift")
        if any(self.level % d for d, _ in self.eta_spec):
            raise ValueError(f"{self.label}: eta argument does not divide the level")

    def to_json(self):
        return {"label": self.label, "level": self.level,
                "eta": [list(x) for x in self.eta_spec], "curve": list(self.curve)}


def eisenstein_qexp(k, precision):
    """E_k = 1 - (2k / B_k) sum sigma_{k-1}(n) q^n, level 1."""
    if k % 2 or k < 4:
        raise UnsupportedWeight(f"Eisenstein series need even k >= 4, got {k}")
    factor = Fraction(-2 * k) / bernoulli(k)
    sig = divisor_sigma_table(precision, k - 1)
    coeffs = [Fraction(1)] + [factor * sig[n] for n in range(1, precision + 1)]
    return ClassicalForm(QExpansion(coeffs, precision, k, 1), k, 1, False)


def delta_qexp(precision):
    """The discriminant function (E_4^3 - E_6^2) / 1728."""
    e4 = eisenstein_qexp(4, precision).expansion
    e6 = eisenstein_qexp(6, precision).expansion
    delta = (e4 * e4 * e4 - e6 * e6) / 1728
    return ClassicalForm(delta.with_tags(12, 1), 12, 1, True)


def hecke_tp(f, p):
    """T_p on coefficients: a_n(T_p f) = a_{np} + p^{k-1} a_{n/p}.

    The result is known up to precision floor(f.precision / p).
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if f.level % p == 0:
        raise BadPrimeForLevel(f"p={p} divides the level {f.level}")
    out = f.precision // p
    if out < 1:
        raise PrecisionExhausted(f"precision {f.precision} too small for T_{p}")
    pk = p ** (f.weight - 1)
    a = f.expansion.coefficients()
    c = [a[n * p] + (pk * a[n // p] if n % p == 0 else 0) for n in range(out + 1)]
    return ClassicalForm(QExpansion(c, out, f.weight, f.level), f.weight, f.level, f.is_cusp)


def eigenvalue_check(f, p):
    """Return lambda_p with T_p f = lambda_p f on every computable coefficient."""
    if f.coeff(1) != 1:
        raise NotNormalized(f"expected a_1 = 1, got {f.coeff(1)}")
    tf = hecke_tp(f, p)
    lam = tf.coeff(1)
    for n in range(tf.precision + 1):
        if tf.coeff(n) != lam * f.coeff(n):
            raise NotAnEigenvector(f"T_{p} f differs from {lam} f at q^{n}")
    return lam


def coeffs_from_eigenvalues(eigen, bad, k, N, n_max):
    """Rebuild a_1..a_{n_max} of a normalized eigenform from prime data.

    ``eigen`` maps good primes to a_p, ``bad`` maps primes dividing N to a_p.
    """
    table = {}
    for p in primes_up_to(n_max):
        if N % p == 0:
            if p not in bad:
                raise IncompleteEigenData(f"missing bad-prime coefficient at p={p}")
            ap = Fraction(bad[p])
            powers = [Fraction(1)]
            while p ** len(powers) <= n_max:
                powers.append(powers[-1] * ap)
        else:
            if p not in eigen:
                raise IncompleteEigenData(f"missing eigenvalue at p={p}")
            ap = Fraction(eigen[p])
            pk = Fraction(p) ** (k - 1)
            powers = [Fraction(1), ap]
            while p ** len(powers) <= n_max:
                powers.append(ap * powers[-1] - pk * powers[-2])
        table[p] = powers
    for p in bad:
        if N % p:
            raise ValueError(f"bad prime {p} does not divide N={N}")
    out = {}
    for n in range(1, n_max + 1):
        a = Fraction(1)
        for p, e in factorint(n).items():
            a *= table[p][e]
        out[n] = a
    return out


def registry_newforms():
    """The curated weight-2 eta-quotient newforms with their matched curves."""
    raw = json.loads(resources.files("modwb").joinpath("data/newforms.json").read_text())
    return [
        NewformRecord(
            label=r["label"],
            level=int(r["level"]),
            eta_spec=tuple((int(d), int(e)) for d, e in r["eta"]),
            curve=tuple(int(a) for a in r["curve"]),
            citation=r.get("citation", ""),
        )
        for r in raw
    ]


def lookup_newform(level):
    for rec in registry_newforms():
        if rec.level == level:
            return rec
    return None


def newform_expansion(record, precision):
    f = eta_expand(list(record.eta_spec), precision)
    return ClassicalForm(f.with_tags(2, record.level), 2, record.level, True)
