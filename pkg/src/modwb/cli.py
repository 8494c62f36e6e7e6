"""Command-line entry point ``modwb``.

Exit codes: 0 success, 1 computation error, 2 modularity refuted, 64 usage error.
Output is deterministic: fixed ordering, exact rationals as strings, no timestamps.
"""

import argparse
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .core.numtheory import is_prime, primes_up_to, rational_str
from .curves.elliptic import EllipticCurveQ, ap_table, ec_local_factor
from .curves.genus2 import Genus2CurveQ, frobenius_poly, genus2_counts
from .errors import ModwbError
from .forms import delta_qexp, eisenstein_qexp, lookup_newform, newform_expansion, registry_newforms
from .modcheck import REFUTED, compare_l_with_zeta, galois_trace_check, verify_elliptic_modularity
from .siegel.expansion import build_chi, evaluate_siegel, maass_dirichlet
from .siegel.symplectic import SiegelPoint
from .zeta import (
    EigenvalueData,
    satake_g1,
    spinor_local,
    spinor_local_g2_from_eigenvalues,
    standard_local,
)

EXIT_OK, EXIT_ERROR, EXIT_REFUTED, EXIT_USAGE = 0, 1, 2, 64

COMMANDS = ("ap", "form-coeffs", "verify", "igusa", "spinor", "standard", "dseries",
            "genus2", "eval-siegel", "trace-check", "compare-l")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(EXIT_USAGE)


@dataclass(frozen=True)
class RunConfig:
    command: str
    params: dict = field(default_factory=dict)
    output: str = None
    format: str = "json"

    BOUND_KEYS = ("pmax", "prec", "det_bound", "trace_bound")

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise UsageError(f"unknown command {self.command!r}")
        if self.format not in ("json", "csv"):
            raise UsageError("format must be json or csv")
        for key in self.BOUND_KEYS:
            v = self.params.get(key)
            if v is not None and v <= 0:
                raise UsageError(f"--{key.replace('_', '-')} must be positive")
        tol = self.params.get("tol")
        if tol is not None and not 0 < tol < 1:
            raise UsageError("--tol must lie in (0, 1)")


def _int_list(text):
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from exc


def _complex_list(text):
    try:
        return [complex(x.replace(" ", "")) for x in text.split(",")]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated complex numbers, got {text!r}") from exc


def build_parser():
    parser = _Parser(prog="modwb", description=__doc__.splitlines()[0])
    parser.add_argument("--output", "-o", help="write the artifact here instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    # accept --output after the subcommand too
    common = _Parser(add_help=False)
    common.add_argument("--output", "-o", default=argparse.SUPPRESS, help=argparse.SUPPRESS)

    p = sub.add_parser("ap", parents=[common], help="a_p table of an elliptic curve (CSV)")
    p.add_argument("--curve", type=_int_list, help="a1,a2,a3,a4,a6")
    p.add_argument("--level", type=int, help="registry curve of this level")
    p.add_argument("--pmax", type=int, required=True)
    p.add_argument("--format", choices=("csv", "json"), default="csv")

    p = sub.add_parser("form-coeffs", parents=[common], help="q-expansion coefficients")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--level", type=int, help="registry weight-2 newform")
    g.add_argument("--delta", action="store_true", help="the discriminant function")
    g.add_argument("--eisenstein", type=int, metavar="K", help="level-one Eisenstein series E_K")
    p.add_argument("--prec", type=int, required=True)

    p = sub.add_parser("verify", parents=[common], help="compare a_p(E) with a_p(f) up to a bound")
    p.add_argument("--level", type=int, required=True, help="level of the registry form")
    p.add_argument("--curve", type=_int_list, help="curve to test (default: the registry curve)")
    p.add_argument("--pmax", type=int, required=True)

    p = sub.add_parser("igusa", parents=[common], help="Fourier coefficients of the weight 10 or 12 cusp form")
    p.add_argument("--k", type=int, choices=(10, 12), required=True)
    p.add_argument("--det-bound", type=int, required=True)

    for name in ("spinor", "standard"):
        p = sub.add_parser(name, parents=[common], help=f"local {name} zeta factor")
        p.add_argument("--g", type=int, choices=(1, 2), required=True)
        p.add_argument("--k", type=int, required=True)
        p.add_argument("--p", type=int, required=True)
        p.add_argument("--ap", type=Fraction, help="a_p of the elliptic eigenform (g = 1)")
        if name == "spinor":
            p.add_argument("--lambda-p", type=Fraction, help="Hecke eigenvalue at p (g = 2)")
            p.add_argument("--lambda-p2", type=Fraction, help="Hecke eigenvalue at p^2 (g = 2)")

    p = sub.add_parser("dseries", parents=[common], help="truncated D(F, s) of the weight 10 or 12 cusp form")
    p.add_argument("--k", type=int, choices=(10, 12), required=True)
    p.add_argument("--s", type=complex, required=True)
    p.add_argument("--det-bound", type=int, required=True)

    p = sub.add_parser("genus2", parents=[common], help="Frobenius polynomials of y^2 = f(x)")
    p.add_argument("--f", type=_int_list, required=True, help="coefficients of f from x^0 up")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--p", type=int)
    g.add_argument("--pmax", type=int)

    p = sub.add_parser("eval-siegel", parents=[common], help="evaluate the weight 10 or 12 cusp form at Omega")
    p.add_argument("--k", type=int, choices=(10, 12), required=True)
    p.add_argument("--omega", type=_complex_list, required=True, help="w11,w12,w22 (e.g. 1.2j,0.3+0.1j,1.1j)")
    p.add_argument("--trace-bound", type=int, required=True)

    p = sub.add_parser("trace-check", parents=[common], help="trace/determinant conditions at g = 1")
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--pmax", type=int, required=True)

    p = sub.add_parser("compare-l", parents=[common], help="compare L(E, s) factors with spinor or standard factors")
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--pmax", type=int, required=True)
    p.add_argument("--mode", choices=("spinor", "standard"), default="spinor")
    return parser


def _config(ns):
    params = {k: v for k, v in vars(ns).items() if k not in ("command", "output", "format")}
    return RunConfig(ns.command, params, ns.output, getattr(ns, "format", "json"))


def _registry_curve(level):
    rec = lookup_newform(level)
    if rec is None:
        levels = ", ".join(str(r.level) for r in registry_newforms())
        raise UsageError(f"no registry form of level {level} (available: {levels})")
    return rec, EllipticCurveQ.from_ainvs(rec.curve, label=rec.label)


def _curve(params):
    if params.get("curve"):
        return EllipticCurveQ.from_ainvs(params["curve"])
    if params.get("level"):
        return _registry_curve(params["level"])[1]
    raise UsageError("give --curve or --level")


def _dump(payload):
    return json.dumps(payload, indent=2) + "\n"


def _factor_json(p, kind, poly):
    return {"p": p, "kind": kind, "coeffs": poly.as_strings()}


def run(cfg):
    """Execute a RunConfig; returns (exit code, text)."""
    c, P = cfg.command, cfg.params
    if c == "ap":
        table = ap_table(_curve(P), P["pmax"])
        if cfg.format == "csv":
            return EXIT_OK, table.to_csv()
        return EXIT_OK, _dump({"source": table.source, "bound": table.bound,
                               "entries": [[p, table.entries[p], int(p in table.bad_primes)]
                                           for p in sorted(table.entries)]})
    if c == "form-coeffs":
        prec = P["prec"]
        if P.get("delta"):
            form, name = delta_qexp(prec), "delta"
        elif P.get("eisenstein") is not None:
            form, name = eisenstein_qexp(P["eisenstein"], prec), f"E{P['eisenstein']}"
        else:
            rec, _ = _registry_curve(P["level"])
            form, name = newform_expansion(rec, prec), rec.label
        return EXIT_OK, _dump({"form": name, "weight": form.weight, "level": form.level, "precision": prec,
                               "coeffs": [rational_str(x) for x in form.expansion.coefficients()]})
    if c == "verify":
        rec, E = _registry_curve(P["level"])
        if P.get("curve"):
            E = EllipticCurveQ.from_ainvs(P["curve"])
        report = verify_elliptic_modularity(E, rec, P["pmax"])
        return (EXIT_REFUTED if report.verdict == REFUTED else EXIT_OK), _dump(report.to_json())
    if c == "igusa":
        return EXIT_OK, _dump(build_chi(P["k"], P["det_bound"]).to_json())
    if c in ("spinor", "standard"):
        p, k, g = P["p"], P["k"], P["g"]
        if not is_prime(p):
            raise UsageError(f"--p {p} is not prime")
        if g == 1:
            if P.get("ap") is None:
                raise UsageError("g = 1 needs --ap")
            sd = satake_g1(P["ap"], p, k)
            poly = spinor_local(sd) if c == "spinor" else standard_local(sd)
        elif c == "spinor":
            if P.get("lambda_p") is None or P.get("lambda_p2") is None:
                raise UsageError("g = 2 needs --lambda-p and --lambda-p2")
            poly = spinor_local_g2_from_eigenvalues(EigenvalueData(p, P["lambda_p"], P["lambda_p2"], k))
        else:
            raise UsageError("the standard factor at g = 2 needs Satake parameters; use the library")
        return EXIT_OK, _dump(_factor_json(p, c, poly))
    if c == "dseries":
        F = build_chi(P["k"], P["det_bound"])
        return EXIT_OK, _dump(maass_dirichlet(F, P["s"]).to_json())
    if c == "genus2":
        C = Genus2CurveQ(tuple(P["f"]))
        primes = [P["p"]] if P.get("p") else [q for q in primes_up_to(P["pmax"]) if C.is_good(q)]
        rows = []
        for q in primes:
            n1, n2 = genus2_counts(C, q)
            rows.append(dict(frobenius_poly(n1, n2, q).to_json(), n1=n1, n2=n2))
        return EXIT_OK, _dump({"f": list(C.f), "discriminant": C.discriminant, "factors": rows})
    if c == "eval-siegel":
        w11, w12, w22 = P["omega"]
        point = SiegelPoint(np.array([[w11, w12], [w12, w22]]))
        B = P["trace_bound"]
        det_bound = (B * B + 3) // 4
        res = evaluate_siegel(build_chi(P["k"], det_bound), point, B)
        return EXIT_OK, _dump({"value": [res.value.real, res.value.imag], "tail_bound": res.tail_bound,
                               "terms": res.terms, "trace_bound": B})
    if c == "trace-check":
        rec, E = _registry_curve(P["level"])
        f = newform_expansion(rec, P["pmax"])
        report = galois_trace_check(ap_table(E, P["pmax"]), f, P["pmax"], form_label=rec.label)
        return (EXIT_REFUTED if report.verdict == REFUTED else EXIT_OK), _dump(report.to_json())
    if c == "compare-l":
        rec, E = _registry_curve(P["level"])
        f = newform_expansion(rec, P["pmax"])
        good = [p for p in primes_up_to(P["pmax"]) if rec.level % p and E.discriminant % p]
        a_side = {p: ec_local_factor(E, p) for p in good}
        f_side = {}
        for p in good:
            sd = satake_g1(f.coeff(p), p, 2)
            f_side[p] = spinor_local(sd) if P["mode"] == "spinor" else standard_local(sd)
        if P["mode"] == "standard":
            a_side = {p: standard_local(satake_g1(-ec_local_factor(E, p).poly[1], p, 2)) for p in good}
        report = compare_l_with_zeta(a_side, f_side, P["mode"], P["pmax"])
        return (EXIT_REFUTED if report.verdict == REFUTED else EXIT_OK), _dump(report.to_json())
    raise UsageError(f"unhandled command {c}")


def main(argv=None):
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        code, text = run(_config(ns))
    except UsageError as exc:
        sys.stderr.write(f"modwb: usage error: {exc}\n")
        return EXIT_USAGE
    except (ModwbError, ValueError, ArithmeticError) as exc:
        sys.stderr.write(f"modwb: error: {exc}\n")
        return EXIT_ERROR
    if ns.output:
        with open(ns.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
