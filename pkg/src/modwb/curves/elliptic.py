"""Elliptic curves over Q: point counts mod p, reduction types and local factors."""

import csv
import io
from dataclasses import dataclass, field

import numpy as np

from ..core.numtheory import is_prime, kronecker, primes_up_to
from ..core.polynomial import LocalFactor, Polynomial
from ..errors import BadReduction, InconsistentCounts, SingularCurve, Unsupported

__all__ = [
    "ApTable",
    "EllipticCurveQ",
    "ap_table",
    "count_points",
    "ec_ap",
    "ec_local_factor",
    "literal_ap",
    "reduction_type",
]

# Reduction at p in {2, 3} for the registry curves (globally minimal models),
# checked against the eta-quotient coefficients by the test suite.
SMALL_PRIME_AP = {
    ((1, 0, 1, -1, 0), 2): -1,
    ((1, 1, 1, 0, 0), 3): -1,
    ((0, 1, 0, -1, 0), 2): 0,
    ((0, -1, 0, 1, 0), 2): 0,
    ((0, -1, 0, 1, 0), 3): -1,
    ((0, 0, 1, 0, 0), 3): 0,
    ((0, 0, 0, -1, 0), 2): 0,
    ((0, 0, 0, 0, 1), 2): 0,
    ((0, 0, 0, 0, 1), 3): 0,
}


@dataclass(frozen=True)
class EllipticCurveQ:
    """Long Weierstrass model y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6."""

    a1: int
    a2: int
    a3: int
    a4: int
    a6: int
    label: str = field(default="", compare=False)

    def __post_init__(self):
        if self.discriminant == 0:
            raise SingularCurve(f"{self.ainvs} has zero discriminant")

    @classmethod
    def from_ainvs(cls, ainvs, label=""):
        a = [int(x) for x in ainvs]
        if len(a) != 5:
            raise ValueError("need five a-invariants")
        return cls(*a, label=label)

    @property
    def ainvs(self):
        return (self.a1, self.a2, self.a3, self.a4, self.a6)

    @property
    def name(self):
        return self.label or "[" + ",".join(map(str, self.ainvs)) + "]"

    @property
    def b2(self):
        return self.a1**2 + 4 * self.a2

    @property
    def b4(self):
        return 2 * self.a4 + self.a1 * self.a3

    @property
    def b6(self):
        return self.a3**2 + 4 * self.a6

    @property
    def b8(self):
        a1, a2, a3, a4, a6 = self.ainvs
        return a1**2 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3**2 - a4**2

    @property
    def c4(self):
        return self.b2**2 - 24 * self.b4

    @property
    def c6(self):
        return -self.b2**3 + 36 * self.b2 * self.b4 - 216 * self.b6

    @property
    def discriminant(self):
        b2, b4, b6, b8 = self.b2, self.b4, self.b6, self.b8
        return -b2**2 * b8 - 8 * b4**3 - 27 * b6**2 + 9 * b2 * b4 * b6


def _square_table(p):
    """chi[v] = Legendre symbol (v/p) for v in 0..p-1, p odd."""
    chi = -np.ones(p, dtype=np.int64)
    x = np.arange(1, p, dtype=np.int64)
    chi[(x * x) % p] = 1
    chi[0] = 0
    return chi


def _count_cubic(coeffs, p):
    """Projective points of y^2 = c3 x^3 + c2 x^2 + c1 x + c0 over F_p, p odd."""
    c3, c2, c1, c0 = (c % p for c in coeffs)
    x = np.arange(p, dtype=np.int64)
    v = (((c3 * x + c2) % p * x + c1) % p * x + c0) % p
    return int(p + _square_table(p)[v].sum()) + 1


def count_points(E, p):
    """Number of points of the reduction of the given model over F_p.

    Includes the point at infinity, and the singular point when p divides
    the discriminant.
    """
    if p == 2:
        a1, a2, a3, a4, a6 = (a % 2 for a in E.ainvs)
        n = 1
        for x in range(2):
            for y in range(2):
                n += (y * y + a1 * x * y + a3 * y - (x**3 + a2 * x * x + a4 * x + a6)) % 2 == 0
        return n
    # complete the square: (2y + a1 x + a3)^2 = 4x^3 + b2 x^2 + 2 b4 x + b6
    return _count_cubic((4, E.b2, 2 * E.b4, E.b6), p)


def ec_ap(E, p):
    """a_p = p + 1 - #E(F_p) at a prime of good reduction."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if E.discriminant % p == 0:
        raise BadReduction(f"p={p} divides the discriminant of {E.name}")
    return p + 1 - count_points(E, p)


def literal_ap(E, p):
    """p + 1 - #E(F_p) on the given model, for any p (singular point included)."""
    return p + 1 - count_points(E, p)


def reduction_type(E, p):
    """One of "good", "split", "nonsplit", "additive" for the minimal model at p.

    For p >= 5 the model is minimalized through c4, c6; multiplicative
    reduction is split iff -c6 is a square mod p.  For p in {2, 3} the
    registry table is used, falling back to the point count on the given
    model (which gives the right answer when that model is minimal at p).
    """
    if E.discriminant % p:
        return "good"
    if p >= 5:
        c4, c6, disc = _minimal_invariants(E, p)
        if disc % p:
            return "good"
        if c4 % p:
            return "split" if kronecker(-c6, p) == 1 else "nonsplit"
        return "additive"
    ap = SMALL_PRIME_AP.get((E.ainvs, p))
    if ap is None:
        ap = literal_ap(E, p)
        if ap not in (-1, 0, 1):
            raise Unsupported(f"model of {E.name} is not minimal at p={p}")
    return {1: "split", -1: "nonsplit", 0: "additive"}[ap]


def _minimal_invariants(E, p):
    """(c4, c6, disc) of a model minimal at p >= 5."""
    c4, c6, disc = E.c4, E.c6, E.discriminant
    while c4 % p**4 == 0 and c6 % p**6 == 0 and disc % p**12 == 0:
        c4, c6, disc = c4 // p**4, c6 // p**6, disc // p**12
    return c4, c6, disc


def ec_local_factor(E, p):
    """Denominator polynomial of the Euler factor of L(E, s) at p, in t = p^{-s}."""
    kind = reduction_type(E, p)
    if kind == "good":
        if E.discriminant % p:
            ap = ec_ap(E, p)
        else:
            # the model is not minimal at p; count on y^2 = x^3 - 27 c4 x - 54 c6
            c4, c6, _ = _minimal_invariants(E, p)
            ap = p + 1 - _count_cubic((1, 0, -27 * c4, -54 * c6), p)
        return LocalFactor(p, Polynomial([1, -ap, p]), "frobenius")
    ap = {"split": 1, "nonsplit": -1, "additive": 0}[kind]
    return LocalFactor(p, Polynomial([1, -ap]), "frobenius")


@dataclass(frozen=True)
class ApTable:
    source: str
    bound: int
    entries: dict
    bad_primes: frozenset = frozenset()

    def to_csv(self):
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["p", "ap", "bad"])
        for p in sorted(self.entries):
            w.writerow([p, self.entries[p], int(p in self.bad_primes)])
        return buf.getvalue()

    @classmethod
    def from_csv(cls, text, source="csv", bound=None):
        rows = list(csv.DictReader(io.StringIO(text)))
        entries = {int(r["p"]): int(r["ap"]) for r in rows}
        bad = frozenset(int(r["p"]) for r in rows if int(r["bad"]))
        return cls(source, bound if bound is not None else max(entries, default=0), entries, bad)


def ap_table(E, bound):
    """a_p for every p <= bound; bad primes take the reduction-type value."""
    entries, bad = {}, set()
    for p in primes_up_to(bound):
        if E.discriminant % p:
            ap = ec_ap(E, p)
            if ap * ap > 4 * p:
                raise InconsistentCounts(f"Hasse bound violated at p={p}: a_p={ap}")
        else:
            bad.add(p)
            ap = -int(ec_local_factor(E, p).poly[1])
        entries[p] = ap
    return ApTable(E.name, bound, entries, frozenset(bad))
