"""Bounded modularity checks: a_p matching, trace/determinant conditions, local factor comparison.

A finite computation can only ever show agreement up to a prime bound, so
the strongest verdict is ``verified-to-bound`` and every report carries its
bound.
"""

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .core.numtheory import primes_up_to, rational_str
from .core.polynomial import LocalFactor, Polynomial
from .curves.elliptic import ApTable, EllipticCurveQ, ec_ap
from .curves.genus2 import FrobeniusPoly, abelian_local_lfactor
from .curves.lfunction import global_l_eval
from .errors import DegreeMismatch, InsufficientCoefficients
from .forms import ClassicalForm, NewformRecord, newform_expansion
from .siegel.expansion import SiegelExpansion, maass_dirichlet

__all__ = [
    "ModularityReport",
    "MIN_VERIFIED_BOUND",
    "compare_l_with_zeta",
    "galois_trace_check",
    "verify_elliptic_modularity",
]

MIN_VERIFIED_BOUND = 100
GEOMETRIC_NOTE = ("Conditions asking for non-constant holomorphic maps from a compactified Siegel "
                  "modular variety or its Jacobian onto A are not machine-checkable and are not "
                  "part of this verdict.")

VERIFIED, REFUTED, INCONCLUSIVE = "verified-to-bound", "refuted", "inconclusive"


def _verdict(mismatches, compared, bound):
    if mismatches:
        return REFUTED
    if compared and bound >= MIN_VERIFIED_BOUND:
        return VERIFIED
    return INCONCLUSIVE


def _jsonable(x):
    if isinstance(x, Fraction):
        return rational_str(x)
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, complex):
        return [x.real, x.imag]
    return x


@dataclass(frozen=True)
class ModularityReport:
    curve: str
    form: str
    bound: int
    matched: tuple = ()
    mismatches: tuple = ()
    skipped: tuple = ()
    flags: tuple = ()
    note: str = GEOMETRIC_NOTE
    details: dict = field(default_factory=dict, compare=False)

    @property
    def verdict(self):
        return _verdict(self.mismatches, len(self.matched), self.bound)

    @property
    def compared(self):
        return len(self.matched) + len(self.mismatches)

    def first_mismatch(self):
        return self.mismatches[0]["p"] if self.mismatches else None

    def to_json(self):
        return {
            "curve": self.curve,
            "form": self.form,
            "bound": self.bound,
            "verdict": self.verdict,
            "mismatches": [{k: _jsonable(v) for k, v in m.items()} for m in self.mismatches],
            "skipped": list(self.skipped),
            "matched": [[p, _jsonable(v)] for p, v in self.matched],
            "flags": list(self.flags),
            "note": self.note,
        }

    @classmethod
    def from_json(cls, data):
        return cls(
            curve=data["curve"],
            form=data["form"],
            bound=int(data["bound"]),
            matched=tuple((int(p), v) for p, v in data.get("matched", [])),
            mismatches=tuple(dict(m) for m in data["mismatches"]),
            skipped=tuple(int(p) for p in data["skipped"]),
            flags=tuple(data.get("flags", [])),
            note=data.get("note", GEOMETRIC_NOTE),
        )


def _form_data(f, bound):
    """(label, level, weight, p -> a_p) for the supported form inputs."""
    if isinstance(f, NewformRecord):
        exp = newform_expansion(f, bound)
        return f.label, f.level, 2, lambda p: exp.coeff(p)
    if isinstance(f, ClassicalForm):
        if f.precision < bound:
            raise InsufficientCoefficients(f"form known to q^{f.precision}, need {bound}")
        return f"weight {f.weight} level {f.level}", f.level, f.weight, f.coeff
    if isinstance(f, ApTable):
        return f.source, None, 2, lambda p: f.entries[p]
    if isinstance(f, dict):
        return "a_p table", None, 2, lambda p: f[p]
    raise TypeError(f"unsupported form data {type(f).__name__}")


def verify_elliptic_modularity(E, f, bound):
    """Compare a_p(E) with a_p(f) at every good p <= bound.

    A prime is skipped when it divides the discriminant of E or the level of f.
    """
    label, level, weight, coeff = _form_data(f, bound)
    flags = []
    if weight != 2:
        flags.append(f"weight mismatch: form has weight {weight}, elliptic curves need 2")
    matched, mismatches, skipped = [], [], []
    for p in primes_up_to(bound):
        if E.discriminant % p == 0 or (level and level % p == 0):
            skipped.append(p)
            continue
        lhs, rhs = ec_ap(E, p), Fraction(coeff(p))
        if lhs == rhs:
            matched.append((p, lhs))
        else:
            mismatches.append({"p": p, "lhs": lhs, "rhs": rhs})
    return ModularityReport(E.name, label, bound, tuple(matched), tuple(mismatches), tuple(skipped), tuple(flags))


def _frobenius_data(frob):
    """p -> (trace, det, g) from an ApTable or a map of Frobenius polynomials."""
    if isinstance(frob, ApTable):
        return {p: (ap, p, 1) for p, ap in frob.entries.items() if p not in frob.bad_primes}, frob.source
    out = {}
    for p, P in frob.items():
        if not isinstance(P, FrobeniusPoly):
            raise TypeError("expected FrobeniusPoly values")
        out[p] = (P.trace, P.det, P.g)
    return out, "frobenius data"


def galois_trace_check(frob, F, bound, form_label=None):
    """Tr(Frob_p) = a(p I_g; F) and det(Frob_p) = p^g at every supplied good p <= bound."""
    data, source = _frobenius_data(frob)
    if isinstance(F, SiegelExpansion):
        coeff = lambda p: F.coeff((p, 0, p))  # noqa: E731
        label = form_label or f"Siegel weight {F.weight} level {F.level}"
    elif isinstance(F, ClassicalForm):
        coeff = F.coeff
        label = form_label or f"weight {F.weight} level {F.level}"
    else:
        coeff = lambda p: F[p]  # noqa: E731
        label = form_label or "coefficient table"
    matched, mismatches, skipped = [], [], []
    for p in primes_up_to(bound):
        if p not in data:
            skipped.append(p)
            continue
        trace, det, g = data[p]
        rhs = Fraction(coeff(p))
        ok = True
        if Fraction(trace) != rhs:
            mismatches.append({"p": p, "lhs": Fraction(trace), "rhs": rhs, "condition": "trace"})
            ok = False
        if Fraction(det) != p**g:
            mismatches.append({"p": p, "lhs": Fraction(det), "rhs": p**g, "condition": "det"})
            ok = False
        if ok:
            matched.append((p, Fraction(trace)))
    return ModularityReport(source, label, bound, tuple(matched), tuple(mismatches), tuple(skipped))


def _as_poly(x):
    if isinstance(x, FrobeniusPoly):
        return abelian_local_lfactor(x).poly
    if isinstance(x, LocalFactor):
        return x.poly
    if isinstance(x, Polynomial):
        return x
    raise TypeError(f"unsupported local data {type(x).__name__}")


def compare_l_with_zeta(a_data, f_data, mode, bound, s_points=(), tol=1e-8):
    """Compare L(A, s) with D(F, s), Z_F(s) or D_F(s).

    ``spinor`` / ``standard``: exact comparison of local polynomials at each
    prime p <= bound present on both sides.  ``maassD``: ``f_data`` is a
    :class:`SiegelExpansion`; the truncated D(F, s) is compared with the
    truncated Euler product of L(A, s) at each point of ``s_points``.
    """
    if mode not in ("spinor", "standard", "maassD"):
        raise ValueError(f"unknown mode {mode!r}")
    a_polys = {p: _as_poly(v) for p, v in a_data.items() if p <= bound}
    label_a, label_f = "abelian local factors", f"{mode} factors"
    if mode == "maassD":
        return _compare_maass(a_polys, f_data, bound, s_points, tol, label_a)
    f_polys = {p: _as_poly(v) for p, v in f_data.items() if p <= bound}
    matched, mismatches, skipped = [], [], []
    for p in primes_up_to(bound):
        if p not in a_polys or p not in f_polys:
            skipped.append(p)
            continue
        lhs, rhs = a_polys[p], f_polys[p]
        if lhs.degree != rhs.degree:
            raise DegreeMismatch(f"p={p}: L(A) factor has degree {lhs.degree}, {mode} factor {rhs.degree}")
        if lhs == rhs:
            matched.append((p, list(lhs.as_strings())))
        else:
            mismatches.append({"p": p, "lhs": lhs.as_strings(), "rhs": rhs.as_strings()})
    return ModularityReport(label_a, label_f, bound, tuple(matched), tuple(mismatches), tuple(skipped))


def _compare_maass(a_polys, F, bound, s_points, tol, label_a):
    if not isinstance(F, SiegelExpansion):
        raise TypeError("maassD mode needs a SiegelExpansion")
    matched, mismatches = [], []
    if a_polys:
        for s in s_points:
            lhs = global_l_eval(a_polys, s, bound)
            rhs = maass_dirichlet(F, s)
            allowance = lhs.tail_bound + rhs.tail_bound + tol * max(1.0, abs(lhs.value))
            if abs(lhs.value - rhs.value) <= allowance:
                matched.append((s, lhs.value))
            else:
                mismatches.append({"p": s, "lhs": lhs.value, "rhs": rhs.value})
    if not math.isfinite(bound):
        raise ValueError("bound must be finite")
    skipped = tuple(p for p in primes_up_to(bound) if p not in a_polys)
    return ModularityReport(label_a, f"D(F,s) weight {F.weight}", bound, tuple(matched),
                            tuple(mismatches), skipped)
