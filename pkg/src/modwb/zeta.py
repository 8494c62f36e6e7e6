"""Satake parameters, local spinor and standard zeta factors, and their Euler products.

Local factors are products: the spinor factor at p is
(1 - a0 t) prod_{r>=1} prod_{i1<...<ir} (1 - a0 a_{i1} ... a_{ir} t), and the
standard factor is (1 - t) prod_i (1 - a_i t)(1 - a_i^{-1} t).  Parameters are
normalized by a0^2 a_1 ... a_g = p^{gk - g(g+1)/2}, which for g = 1 turns the
spinor factor into 1 - a_p t + p^{k-1} t^2.
"""

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction

import mpmath

from .core.dirichlet import DirichletEval, euler_product
from .core.numtheory import factorint, primes_up_to
from .core.polynomial import LocalFactor, Polynomial
from .errors import PreconditionError, SingularSatake, UnresolvedSatake

__all__ = [
    "EigenvalueData",
    "SatakeData",
    "StandardIdentityReport",
    "euler_eval",
    "remark_standard_identity_check",
    "satake_from_local",
    "satake_g1",
    "sk_eigenvalues",
    "spinor_local",
    "spinor_local_g2_from_eigenvalues",
    "standard_local",
]


def _normalizer(p, g, k):
    return mpmath.mpf(p) ** (g * k - g * (g + 1) // 2)


@dataclass(frozen=True)
class SatakeData:
    """p-Satake parameters (alpha_0, ..., alpha_g) of a degree-g eigenform of weight k.

    ``exact`` marks data whose local polynomials are known to be rational,
    so :func:`spinor_local` rounds them back to Fractions.
    """

    p: int
    g: int
    k: int
    alpha: tuple
    exact: bool = False
    dps: int = 50

    def __post_init__(self):
        if len(self.alpha) != self.g + 1:
            raise PreconditionError(f"need g + 1 = {self.g + 1} parameters, got {len(self.alpha)}")
        with mpmath.workdps(self.dps):
            alpha = tuple(mpmath.mpc(a) for a in self.alpha)
            object.__setattr__(self, "alpha", alpha)
            lhs = alpha[0] ** 2 * mpmath.fprod(alpha[1:])
            rhs = _normalizer(self.p, self.g, self.k)
            if abs(lhs - rhs) > 1e-9 * rhs:
                raise PreconditionError(f"a0^2 prod a_i = {mpmath.nstr(lhs, 12)} != p^(gk - g(g+1)/2)")

    def to_json(self):
        return {"p": self.p, "g": self.g, "k": self.k, "exact": self.exact,
                "alpha": [[float(mpmath.re(a)), float(mpmath.im(a))] for a in self.alpha]}


@dataclass(frozen=True)
class EigenvalueData:
    p: int
    lambda_p: Fraction
    lambda_p2: Fraction
    k: int
    g: int = 2


def satake_g1(ap, p, k, dps=50, exact=True):
    """Parameters of an elliptic eigenform: a0 and a0 a1 are the roots of x^2 - a_p x + p^{k-1}."""
    if exact:
        dps = _exact_dps(p, 1, k, dps)
    with mpmath.workdps(dps):
        a = mpmath.mpf(Fraction(ap).numerator) / Fraction(ap).denominator
        pk = mpmath.mpf(p) ** (k - 1)
        root = mpmath.sqrt(mpmath.mpc(a * a - 4 * pk))
        b1, b2 = (a + root) / 2, (a - root) / 2
        return SatakeData(p, 1, k, (b1, b2 / b1), exact=exact, dps=dps)


def _product_poly(roots, dps):
    with mpmath.workdps(dps):
        poly = Polynomial([mpmath.mpc(1)])
        for r in roots:
            poly = poly * Polynomial([mpmath.mpc(1), -r])
        return poly


def _spinor_roots(sd):
    a0, rest = sd.alpha[0], sd.alpha[1:]
    return [a0 * mpmath.fprod(subset)
            for r in range(sd.g + 1) for subset in itertools.combinations(rest, r)]


def _exact_dps(p, g, k, dps):
    """Working digits that leave room to recognize denominators up to p^{gk}."""
    return max(dps, 2 * int(g * k * math.log10(p)) + 30)


def _rationalize(poly, roots, sd):
    m = max([abs(r) for r in roots] + [mpmath.mpf(1)])
    n = len(roots)
    scale = [math.comb(n, j) * m**j for j in range(n + 1)]
    tol = mpmath.mpf(10) ** (-(sd.dps // 2))
    return poly.rationalize(max_den=sd.p ** (sd.g * sd.k), rel_tol=tol, scale=scale)


def spinor_local(sd):
    """Z_{F,p}(t), a polynomial of degree 2^g."""
    with mpmath.workdps(sd.dps):
        roots = _spinor_roots(sd)
        poly = _product_poly(roots, sd.dps)
        return _rationalize(poly, roots, sd) if sd.exact else poly


def standard_local(sd):
    """D_{F,p}(t) = (1 - t) prod_i (1 - a_i t)(1 - a_i^{-1} t), degree 2g + 1."""
    with mpmath.workdps(sd.dps):
        if any(abs(a) == 0 for a in sd.alpha[1:]):
            raise SingularSatake("a Satake parameter vanishes")
        roots = [mpmath.mpc(1)]
        for a in sd.alpha[1:]:
            roots += [a, 1 / a]
        poly = _product_poly(roots, sd.dps)
        return _rationalize(poly, roots, sd) if sd.exact else poly


def spinor_local_g2_from_eigenvalues(ev):
    """1 - l(p) t + (l(p)^2 - l(p^2) - p^{2k-4}) t^2 - l(p) p^{2k-3} t^3 + p^{4k-6} t^4."""
    if ev.g != 2:
        raise PreconditionError("eigenvalue formula is for degree 2")
    p, k = ev.p, ev.k
    lp, lp2 = Fraction(ev.lambda_p), Fraction(ev.lambda_p2)
    return Polynomial([1, -lp, lp * lp - lp2 - p ** (2 * k - 4), -lp * p ** (2 * k - 3), p ** (4 * k - 6)])


def sk_eigenvalues(ap_f, ap2_f, k, p):
    """Hecke eigenvalues at p, p^2 of the Saito-Kurokawa lift of a weight 2k-2 eigenform f.

    l(p) = a_p + p^{k-1} + p^{k-2}.  l(p^2) is the value that makes the
    spinor factor split as (1 - p^{k-1} t)(1 - p^{k-2} t)(1 - a_p t + p^{2k-3} t^2);
    ``ap2_f`` (a_{p^2} of f, may be None) is checked against a_p^2 - p^{2k-3}.
    """
    a = Fraction(ap_f)
    w = p ** (2 * k - 3)
    if ap2_f is not None and Fraction(ap2_f) != a * a - w:
        raise PreconditionError(f"a_(p^2) = {ap2_f} is inconsistent with a_p = {a} at p={p}")
    s = p ** (k - 1) + p ** (k - 2)
    lam = a + s
    lam2 = a * a + a * s + p ** (2 * k - 2)
    return EigenvalueData(p, lam, lam2, k, 2)


def _multiset_match(values, targets, tol):
    remaining = list(targets)
    for v in values:
        j = min(range(len(remaining)), key=lambda i: abs(remaining[i] - v), default=None)
        if j is None or abs(remaining[j] - v) > tol * max(1, abs(v)):
            return False
        remaining.pop(j)
    return True


def satake_from_local(poly, p, g, k, dps=50, tol=1e-8):
    """Recover Satake parameters from a spinor factor of degree 2^g.

    The inverse roots are labeled by trying each choice of a0 and of the g
    roots a0 a_i; a labeling is accepted when every subset product is a root,
    the normalization holds and the rebuilt factor matches ``poly``.
    """
    n = 2**g
    if poly.degree != n:
        raise UnresolvedSatake(f"expected degree {n}, got {poly.degree}")
    if poly.is_exact():
        dps = _exact_dps(p, g, k, dps)
    with mpmath.workdps(dps):
        inv_roots = [1 / r for r in poly.roots(dps)]
        exact = poly.is_exact()
        for i0 in range(n):
            a0 = inv_roots[i0]
            others = [j for j in range(n) if j != i0]
            for chosen in itertools.combinations(others, g):
                alpha = (a0,) + tuple(inv_roots[j] / a0 for j in chosen)
                lhs = alpha[0] ** 2 * mpmath.fprod(alpha[1:])
                target = _normalizer(p, g, k)
                if abs(lhs - target) > 1e-9 * target:
                    continue
                sd = SatakeData(p, g, k, alpha, exact=False, dps=dps)
                if not _multiset_match(_spinor_roots(sd), inv_roots, tol):
                    continue
                rebuilt = spinor_local(sd)
                scale = max(abs(mpmath.mpmathify(c)) for c in poly.coeffs)
                if all(abs(mpmath.mpmathify(rebuilt[j]) - mpmath.mpmathify(poly[j])) <= tol * scale
                       for j in range(n + 1)):
                    return SatakeData(p, g, k, alpha, exact=exact, dps=dps)
    raise UnresolvedSatake(f"no labeling of the roots reproduces the factor at p={p}")


def euler_eval(local, s, p_max, growth_exponent=None):
    """prod_{p <= p_max} local_p(p^{-s})^{-1}."""
    if not local:
        return DirichletEval(complex(s), 0, 1 + 0j, 0.0)
    return euler_product(local, s, p_max, growth_exponent)


@dataclass(frozen=True)
class StandardIdentityReport:
    """Both sides of D_f(s - k + 1) = [Euler factor] * sum a(n^2) n^{-s}.

    ``rhs_printed`` uses prod_p (1 + p^{k-s-1})^{-1}; ``rhs_corrected`` also
    multiplies by prod_p (1 - p^{k-s-1})^{-1}, i.e. by zeta(s - k + 1).
    """

    s: float
    k: int
    p_max: int
    n_max: int
    lhs: float
    rhs_printed: float
    rhs_corrected: float
    tail_bound: float
    notes: dict = field(default_factory=dict, compare=False)

    @property
    def difference(self):
        return abs(self.lhs - self.rhs_printed)

    @property
    def corrected_difference(self):
        return abs(self.lhs - self.rhs_corrected)

    def passes(self, tol):
        return self.difference <= tol and self.difference <= self.tail_bound

    def corrected_passes(self, tol):
        return self.corrected_difference <= tol and self.corrected_difference <= self.tail_bound

    def to_json(self):
        return {"s": self.s, "k": self.k, "p_max": self.p_max, "n_max": self.n_max,
                "lhs": self.lhs, "rhs_printed": self.rhs_printed, "rhs_corrected": self.rhs_corrected,
                "difference": self.difference, "corrected_difference": self.corrected_difference,
                "tail_bound": self.tail_bound, "notes": self.notes}


def _square_coefficients(ap, k, n_max):
    """a(n^2) for n <= n_max from a_p, using a(p^{e+1}) = a_p a(p^e) - p^{k-1} a(p^{e-1})."""
    cache = {}
    for p in primes_up_to(n_max):
        e_max = 0
        while p ** (e_max + 1) <= n_max:
            e_max += 1
        seq = [1, ap[p]]
        for _ in range(2 * e_max - 1):
            seq.append(ap[p] * seq[-1] - p ** (k - 1) * seq[-2])
        cache[p] = seq
    out = {}
    for n in range(1, n_max + 1):
        v = 1
        for p, e in factorint(n).items():
            v *= cache[p][2 * e]
        out[n] = v
    return out


def remark_standard_identity_check(ap, k, s, p_max, n_max, dps=40):
    """Compare D_f(s - k + 1) with prod_p (1 + p^{k-s-1})^{-1} * sum_{n <= n_max} a(n^2) n^{-s}.

    ``ap`` maps every prime p <= max(p_max, n_max) to a_p(f) (all zero for
    the zero form).  The tail bound adds the Euler-product tails of both
    sides, the Dirichlet tail (|a(n^2)| <= d(n^2) n^{k-1} <= n^{k-1/2}...
    bounded with the empirical constant) and a roundoff allowance.
    """
    if s <= k + 1:
        raise PreconditionError(f"s = {s} must exceed k + 1 = {k + 1}")
    need = primes_up_to(max(p_max, n_max))
    missing = [p for p in need if p not in ap]
    if missing:
        raise PreconditionError(f"missing a_p for p = {missing[:5]}...")
    zero_form = all(ap[p] == 0 for p in need)
    with mpmath.workdps(dps):
        s_mp = mpmath.mpf(s)
        sigma = s_mp - k + 1
        lhs = mpmath.mpf(1)
        if zero_form:
            lhs = mpmath.mpf(0)
        else:
            for p in primes_up_to(p_max):
                poly = standard_local(satake_g1(ap[p], p, k, dps, exact=False))
                lhs /= mpmath.re(poly(mpmath.mpf(p) ** (-sigma)))
        printed = mpmath.mpf(1)
        zeta_part = mpmath.mpf(1)
        for p in primes_up_to(p_max):
            x = mpmath.mpf(p) ** (k - s_mp - 1)
            printed /= 1 + x
            zeta_part /= 1 - x
        sq = {} if zero_form else _square_coefficients(ap, k, n_max)
        series = mpmath.fsum(mpmath.mpf(v) * mpmath.mpf(n) ** (-s_mp) for n, v in sq.items() if v)
        rhs_printed = printed * series
        rhs_corrected = rhs_printed * zeta_part
        # tails: Euler factors beyond p_max (inverse roots of modulus <= 1 in p^{-sigma})
        P = mpmath.mpf(p_max)
        euler_tail = 3 * P ** (1 - sigma) / ((sigma - 1) * (1 - P ** (-sigma)))
        c_emp = max([abs(mpmath.mpf(v)) / mpmath.mpf(n) ** (k - mpmath.mpf(1) / 2) for n, v in sq.items()]
                    + [mpmath.mpf(0)])
        growth = k - mpmath.mpf(1) / 2
        dirichlet_tail = c_emp * mpmath.mpf(n_max) ** (growth - s_mp + 1) / (s_mp - growth - 1)
        scale = max(abs(lhs), abs(rhs_corrected), mpmath.mpf(1))
        tail = (abs(lhs) * mpmath.expm1(euler_tail) + abs(rhs_corrected) * mpmath.expm1(2 * euler_tail)
                + 2 * dirichlet_tail + scale * mpmath.mpf(10) ** (-(dps - 10)))
        notes = {"euler_tail_exponent": float(euler_tail), "dirichlet_tail": float(dirichlet_tail),
                 "growth_constant": "empirical max of |a(n^2)| / n^(k-1/2)",
                 "reading": "sum over primes read as a product"}
        return StandardIdentityReport(float(s), k, p_max, n_max, float(lhs), float(rhs_printed),
                                      float(rhs_corrected), float(tail), notes)
