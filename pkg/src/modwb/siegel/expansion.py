"""Degree-2 Fourier expansions stored per GL_2(Z)-class of half-integral T."""

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from ..core.dirichlet import DirichletEval
from ..core.numtheory import rational_str
from ..core.series import QExpansion
from ..errors import DivergenceRisk, InsufficientCoefficients, PreconditionError
from ..forms import ClassicalForm
from .jacobi import jacobi_cusp_form
from .quadforms import HalfIntegralMatrix, epsilon_units, reduce_class, reduced_classes

__all__ = [
    "SiegelEvaluation",
    "SiegelExpansion",
    "build_chi",
    "evaluate_siegel",
    "maass_dirichlet",
    "maass_lift",
    "phi_operator",
]


def _key(T):
    """Storage key: reduced (a, b, c) for T > 0, (n, 0, 0) with n = content for rank <= 1."""
    T = T if isinstance(T, HalfIntegralMatrix) else HalfIntegralMatrix(*T)
    if not T.is_semipositive():
        raise PreconditionError(f"{T.as_tuple()} is not semi-positive")
    if T.disc == 0:
        return (T.content, 0, 0)
    return reduce_class(T)[0].as_tuple()


@dataclass(frozen=True)
class SiegelExpansion:
    """a(T; F) for level 1 and even weight, one value per class.

    ``det_bound`` is the coverage in det T = (4ac - b^2)/4: every positive
    class with det T <= det_bound is known (absent keys are zero).  Rank-one
    classes (n, 0, 0) are covered for n <= ``semidefinite_bound``.
    """

    weight: int
    level: int
    det_bound: int
    coeffs: dict = field(default_factory=dict)
    semidefinite_bound: int = 0

    def __post_init__(self):
        clean = {}
        for key, v in self.coeffs.items():
            v = Fraction(v)
            if v:
                clean[_key(key)] = v
        object.__setattr__(self, "coeffs", clean)

    def covers(self, T):
        T = T if isinstance(T, HalfIntegralMatrix) else HalfIntegralMatrix(*T)
        if T.disc == 0:
            return T.content <= self.semidefinite_bound or T.content == 0
        return T.det <= self.det_bound

    def coeff(self, T):
        if not self.covers(T):
            raise InsufficientCoefficients(f"a(T) for T = {tuple(T)} is beyond det_bound {self.det_bound}")
        return self.coeffs.get(_key(T), Fraction(0))

    __getitem__ = coeff

    def is_cusp_form(self):
        return all(key[1:] != (0, 0) for key in self.coeffs) and self.coeffs.get((0, 0, 0), 0) == 0

    def to_json(self):
        rows = [[a, b, c, rational_str(v)] for (a, b, c), v in sorted(self.coeffs.items())]
        out = {"weight": self.weight, "level": self.level, "det_bound": self.det_bound, "coeffs": rows}
        if self.semidefinite_bound:
            out["semidefinite_bound"] = self.semidefinite_bound
        return out

    @classmethod
    def from_json(cls, data):
        coeffs = {(int(a), int(b), int(c)): Fraction(v) for a, b, c, v in data["coeffs"]}
        return cls(int(data["weight"]), int(data["level"]), int(data["det_bound"]), coeffs,
                   int(data.get("semidefinite_bound", 0)))


def _divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def maass_lift(phi, k, det_bound):
    """Saito-Kurokawa lift of an index-one Jacobi cusp form with coefficients c(D).

    a(T) = sum_{d | gcd(a, b, c)} d^{k-1} c((4ac - b^2) / d^2) for T > 0.
    """
    if any(D <= 0 and v for D, v in phi.items()):
        raise PreconditionError("the Jacobi form must be cuspidal (c(D) = 0 for D <= 0)")
    coeffs = {}
    for T in reduced_classes(4 * det_bound):
        total = Fraction(0)
        for d in _divisors(T.content):
            total += d ** (k - 1) * Fraction(phi.get(T.disc // (d * d), 0))
        if total:
            coeffs[T.as_tuple()] = total
    # rank-one classes get sum_d d^{k-1} c(0) = 0, known at every n
    return SiegelExpansion(k, 1, det_bound, coeffs, semidefinite_bound=det_bound)


def build_chi(k, det_bound):
    """The level-one Siegel cusp eigenform of weight 10 or 12 with a((1,1,1)) = 1."""
    phi = jacobi_cusp_form(k, 4 * det_bound)
    return maass_lift(phi, k, det_bound)


def phi_operator(F, precision=None):
    """Siegel's Phi: sum_n a((n, 0, 0)) q^n."""
    prec = F.semidefinite_bound if precision is None else precision
    coeffs = [F.coeffs.get((n, 0, 0), Fraction(0)) for n in range(prec + 1)]
    expansion = QExpansion(coeffs, prec, F.weight, F.level)
    return ClassicalForm(expansion, F.weight, F.level, coeffs[0] == 0)


def maass_dirichlet(F, s, det_bound=None, growth_constant=None):
    """Truncated D(F, s) = sum over classes T > 0 of a(T)/eps(T) * det(T)^{-s}.

    The tail assumes |sum_{det T = t} a(T)/eps(T)| <= C t^{k/2}, with C the
    empirical maximum over the summed range unless supplied.
    """
    s = complex(s)
    bound = F.det_bound if det_bound is None else det_bound
    if bound > F.det_bound:
        raise InsufficientCoefficients(f"det_bound {bound} exceeds coverage {F.det_bound}")
    k = F.weight
    growth = k / 2
    if s.real <= growth + 1:
        raise DivergenceRisk(f"Re(s) = {s.real} must exceed k/2 + 1 = {growth + 1}")
    by_det = {}
    for key, v in F.coeffs.items():
        T = HalfIntegralMatrix(*key)
        if T.disc == 0 or T.det > bound:
            continue
        by_det[T.disc] = by_det.get(T.disc, Fraction(0)) + v / epsilon_units(T)
    total = 0j
    c_emp = 0.0
    for disc in sorted(by_det):
        t = disc / 4
        total += float(by_det[disc]) * cmath.exp(-s * math.log(t))
        c_emp = max(c_emp, abs(float(by_det[disc])) / t**growth)
    notes = {"det_convention": "det T = (4ac - b^2)/4", "classes": "T > 0 only",
             "convergence": f"Re(s) > {growth + 1:g}"}
    if growth_constant is None:
        growth_constant = c_emp
        notes["growth_constant"] = "empirical max over summed range"
    # det T runs over quarter-integers: at most 4 values per unit interval
    x = max(bound, 1)
    tail = 4 * growth_constant * x ** (growth - s.real + 1) / (s.real - growth - 1)
    return DirichletEval(s, len(by_det), total, tail, growth, growth_constant, notes)


@dataclass(frozen=True)
class SiegelEvaluation:
    value: complex
    tail_bound: float
    terms: int
    trace_bound: int


def evaluate_siegel(F, point, trace_bound, growth_constant=None):
    """F(Omega) = sum_T a(T) exp(2 pi i Tr(T Omega)) over all T with Tr T <= trace_bound.

    The tail uses |a(T)| <= C det(T)^{k/2} <= C (Tr T / 2)^k and
    |exp(2 pi i Tr(T Omega))| <= exp(-2 pi lambda Tr T), lambda the smallest
    eigenvalue of Im Omega.
    """
    if point.g != 2:
        raise PreconditionError("degree-2 points only")
    B = int(trace_bound)
    if F.det_bound < Fraction(B * B, 4):
        raise InsufficientCoefficients(f"trace bound {B} needs det_bound >= {B * B / 4}, have {F.det_bound}")
    w11, w12, w22 = point.omega[0, 0], point.omega[0, 1], point.omega[1, 1]
    total = 0j
    terms = 0
    for a in range(B + 1):
        for c in range(B - a + 1):
            bmax = math.isqrt(4 * a * c)
            for b in range(-bmax, bmax + 1):
                T = HalfIntegralMatrix(a, b, c)
                if T.disc == 0 and T.content > F.semidefinite_bound:
                    continue
                v = F.coeffs.get(_key(T), 0)
                if v:
                    total += float(v) * cmath.exp(2j * math.pi * (a * w11 + b * w12 + c * w22))
                    terms += 1
    lam = point.imag_min_eigenvalue
    if growth_constant is None:
        growth_constant = max((abs(float(v)) / float(HalfIntegralMatrix(*key).det) ** (F.weight / 2)
                               for key, v in F.coeffs.items() if key[1:] != (0, 0)), default=0.0)
    tail = 0.0
    t = B + 1
    while True:
        # at most (t + 1)(2t + 1) matrices of trace t
        term = growth_constant * (t / 2) ** F.weight * (t + 1) * (2 * t + 1) * math.exp(-2 * math.pi * lam * t)
        tail += term
        if t > 2 * B + 50 and term < 1e-30 * max(tail, 1e-300):
            break
        if t > 100 * (B + 10):
            tail = math.inf
            break
        t += 1
    return SiegelEvaluation(total, tail, terms, B)
