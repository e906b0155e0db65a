"""Command-line front end.

Subcommands:

    gw A13 A23 A14 A24   invariant of a class, by either or both routes
    moduli M N           list the moduli components of [M, M, N, N]
    verify SUITE         run a verification sweep (identities|oracle|geometry|all)
    baseline LMAX        sublattice counts against sigma_1

Exit codes: 0 success, 1 internal cross-check failure, 2 invalid input.
Diagnostics go to stderr, data to stdout.  Exact rationals are serialised as
num/den string pairs; floating geometry fields carry an "approx" marker.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys
from fractions import Fraction
from typing import Dict, List, Optional, Sequence

from .arith import (
    aut_weight_sum,
    aut_weight_sum_closed,
    cesaro_check,
    count_sublattices_hnf,
    sigma,
)
from .geometry import cr_residual, eval_class_integrate, symplectic_area
from .gwcount import (
    GWResult,
    aut_size_smith,
    component_eval_class,
    gw_closed_form,
    gw_enumerated,
    moduli_components,
)
from .homs import homology_class, plucker_holds, sum_representative
from .nilalg import H3Class, HomologyClass

SCHEMA_VERSION = "1"

_CSV_DOC = """\
CSV column layouts (fixed):
  gw:       a13,a23,a14,a24,method,m,n,e134,e234,e124,agrees
  moduli:   d,k,l,dp1,dp2,dp3,dp4,dq1,dq2,dq3,dq4,tau1,tau2,theta,c0_n2,
            aut_size,ev_e134,ev_e234,ev_e124,cr_residual
  baseline: ell,hnf_count,sigma1,equal
Rationals are printed as num/den (or plain integers); floats are decimal.
"""


# ---------------------------------------------------------------------------
# Serialisation helpers
# ---------------------------------------------------------------------------


def _frac_json(x: Fraction) -> Dict[str, str]:
    return {"num": str(x.numerator), "den": str(x.denominator)}


def _approx_json(x: float) -> Dict[str, object]:
    return {"value": x, "approx": True}


def _frac_text(x: Fraction) -> str:
    return str(x)


def _h3_json(c: H3Class) -> Dict[str, Dict[str, str]]:
    return {
        "e134": _frac_json(c.e134),
        "e234": _frac_json(c.e234),
        "e124": _frac_json(c.e124),
    }


def _gw_result_json(r: GWResult) -> Dict[str, object]:
    return {
        "input_class": [str(v) for v in r.input_class.coords()],
        "normalized": [str(v) for v in r.normalized.coords()],
        "m": str(r.m),
        "n": str(r.n),
        "method": r.method,
        "gw": _h3_json(r.gw),
    }


def _emit_json(payload: Dict[str, object]) -> None:
    print(json.dumps(payload, indent=2))


# ---------------------------------------------------------------------------
# gw
# ---------------------------------------------------------------------------


def _cmd_gw(args: argparse.Namespace) -> int:
    A = HomologyClass(args.a13, args.a23, args.a14, args.a24)
    if not plucker_holds(A):
        print("error: class not representable by tori (Plücker)",
              file=sys.stderr)
        return 2
    results: List[GWResult] = []
    if args.method in ("closed", "both"):
        results.append(gw_closed_form(A))
    if args.method in ("enumerate", "both"):
        results.append(gw_enumerated(A))
    agrees: Optional[bool] = None
    if args.method == "both":
        agrees = results[0].gw == results[1].gw

    if args.format == "json":
        payload: Dict[str, object] = {
            "schema_version": SCHEMA_VERSION,
            "command": "gw",
            "class": [str(v) for v in A.coords()],
            "method": args.method,
            "results": [_gw_result_json(r) for r in results],
        }
        if agrees is not None:
            payload["agrees"] = agrees
        _emit_json(payload)
    elif args.format == "csv":
        writer = csv.writer(sys.stdout)
        writer.writerow(["a13", "a23", "a14", "a24", "method", "m", "n",
                         "e134", "e234", "e124", "agrees"])
        for r in results:
            writer.writerow(list(A.coords()) + [
                r.method, r.m, r.n,
                _frac_text(r.gw.e134), _frac_text(r.gw.e234),
                _frac_text(r.gw.e124),
                "" if agrees is None else str(agrees).lower(),
            ])
    else:
        print(f"class:      {list(A.coords())}")
        r0 = results[0]
        print(f"normalized: {list(r0.normalized.coords())}   "
              f"m={r0.m} n={r0.n}")
        for r in results:
            print(f"{r.method:>10}: e134={_frac_text(r.gw.e134)} "
                  f"e234={_frac_text(r.gw.e234)} e124={_frac_text(r.gw.e124)}")
        if agrees is not None:
            print(f"agrees: {str(agrees).lower()}")
    if agrees is False:
        print("error: closed and enumerated invariants disagree",
              file=sys.stderr)
        return 1
    return 0


# ---------------------------------------------------------------------------
# moduli
# ---------------------------------------------------------------------------


def _cmd_moduli(args: argparse.Namespace) -> int:
    if args.m == 0:
        print("error: moduli with m = 0 are obstructed and do not contribute",
              file=sys.stderr)
        return 2
    comps = moduli_components(args.m, args.n)
    records = []
    for comp in comps:
        sol = comp.solution
        records.append({
            "d": comp.d,
            "k": comp.k,
            "l": comp.ell,
            "hom": comp.hom,
            "tau1": sol.modulus.tau1,
            "tau2": sol.modulus.tau2,
            "theta": sol.psi.theta(),
            "c0_n2": sol.c0.c2,
            "aut_size": comp.aut_size,
            "eval_class": comp.eval_class,
            "cr_residual": cr_residual(sol),
        })

    if args.format == "json":
        payload = {
            "schema_version": SCHEMA_VERSION,
            "command": "moduli",
            "m": str(args.m),
            "n": str(args.n),
            "components": [
                {
                    "d": str(rec["d"]),
                    "k": str(rec["k"]),
                    "l": str(rec["l"]),
                    "hom": {
                        "dp": [_frac_json(v) for v in rec["hom"].dp.coords()],
                        "dq": [_frac_json(v) for v in rec["hom"].dq.coords()],
                    },
                    "tau1": _approx_json(rec["tau1"]),
                    "tau2": _approx_json(rec["tau2"]),
                    "theta": _approx_json(rec["theta"]),
                    "c0_n2": _frac_json(rec["c0_n2"]),
                    "aut_size": str(rec["aut_size"]),
                    "eval_class": _h3_json(rec["eval_class"]),
                    "cr_residual": _approx_json(rec["cr_residual"]),
                }
                for rec in records
            ],
        }
        _emit_json(payload)
    elif args.format == "csv":
        writer = csv.writer(sys.stdout)
        writer.writerow(["d", "k", "l",
                         "dp1", "dp2", "dp3", "dp4",
                         "dq1", "dq2", "dq3", "dq4",
                         "tau1", "tau2", "theta", "c0_n2", "aut_size",
                         "ev_e134", "ev_e234", "ev_e124", "cr_residual"])
        for rec in records:
            hom = rec["hom"]
            writer.writerow(
                [rec["d"], rec["k"], rec["l"]]
                + [_frac_text(v) for v in hom.dp.coords()]
                + [_frac_text(v) for v in hom.dq.coords()]
                + [repr(rec["tau1"]), repr(rec["tau2"]), repr(rec["theta"]),
                   _frac_text(rec["c0_n2"]), rec["aut_size"],
                   _frac_text(rec["eval_class"].e134),
                   _frac_text(rec["eval_class"].e234),
                   _frac_text(rec["eval_class"].e124),
                   repr(rec["cr_residual"])]
            )
    else:
        print(f"moduli components of [{args.m}, {args.m}, {args.n}, {args.n}]"
              f" ({len(records)} components)")
        header = (f"{'d':>3} {'k':>3} {'l':>3} {'matrix (dp | dq)':<26} "
                  f"{'tau1':>9} {'tau2':>9} {'theta':>9} {'c0':>7} "
                  f"{'|Aut|':>5} {'eval':>9} {'residual':>9}")
        print(header)
        for rec in records:
            hom = rec["hom"]
            mat = "[" + ",".join(_frac_text(v) for v in hom.dp.coords()) + \
                  " | " + ",".join(_frac_text(v) for v in hom.dq.coords()) + "]"
            ev = rec["eval_class"]
            print(f"{rec['d']:>3} {rec['k']:>3} {rec['l']:>3} {mat:<26} "
                  f"{rec['tau1']:>9.5f} {rec['tau2']:>9.5f} "
                  f"{rec['theta']:>9.5f} {_frac_text(rec['c0_n2']):>7} "
                  f"{rec['aut_size']:>5} "
                  f"{_frac_text(ev.e134):>9} {rec['cr_residual']:>9.2e}")
    return 0


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------


class _Sweep:
    def __init__(self, name: str) -> None:
        self.name = name
        self.checked = 0
        self.failures: List[str] = []

    def check(self, ok: bool, detail: str) -> None:
        self.checked += 1
        if not ok:
            self.failures.append(detail)


def _verify_identities(max_n: int) -> List[_Sweep]:
    weight = _Sweep("identities/weight-sum")
    for m in range(1, max_n + 1):
        for n in range(0, max_n + 1):
            ok = aut_weight_sum(m, n) == aut_weight_sum_closed(m, n)
            weight.check(ok, f"weight sum mismatch at m={m} n={n}")
    hnf = _Sweep("identities/hnf-sigma1")
    for ell in range(1, max_n + 1):
        ok = count_sublattices_hnf(ell) == sigma(1, ell)
        hnf.check(ok, f"sublattice count mismatch at ell={ell}")
    ces = _Sweep("identities/cesaro")
    funcs = {"one": lambda v: 1, "id": lambda v: v, "square": lambda v: v * v}
    for fname, f in funcs.items():
        for n in range(1, max_n + 1):
            ok = cesaro_check(f, n).equal
            ces.check(ok, f"cesaro mismatch at f={fname} n={n}")
    return [weight, hnf, ces]


def _verify_oracle(max_n: int) -> List[_Sweep]:
    gw = _Sweep("oracle/closed-vs-enumerated")
    auts = _Sweep("oracle/aut-formula-vs-smith")
    counts = _Sweep("oracle/component-count")
    for m in [v for v in range(-max_n, max_n + 1) if v != 0]:
        for n in range(-max_n, max_n + 1):
            A = HomologyClass(m, m, n, n)
            ok = gw_closed_form(A).gw == gw_enumerated(A).gw
            gw.check(ok, f"invariant mismatch at m={m} n={n}")
            comps = moduli_components(m, n)
            expected = abs(m) * sigma(0, math.gcd(m, n))
            counts.check(len(comps) == expected,
                         f"component count mismatch at m={m} n={n}")
            for comp in comps:
                rep = sum_representative(m, n, comp.d, comp.k, comp.ell)
                ok = comp.aut_size == aut_size_smith(rep)
                auts.check(ok, f"aut mismatch at m={m} n={n} "
                               f"(d,k,l)=({comp.d},{comp.k},{comp.ell})")
    return [gw, auts, counts]


def _verify_geometry(max_n: int) -> List[_Sweep]:
    residual = _Sweep("geometry/cr-residual")
    area = _Sweep("geometry/area-positivity")
    cycle = _Sweep("geometry/eval-cycle")
    for m in [v for v in range(-max_n, max_n + 1) if v != 0]:
        for n in range(-max_n, max_n + 1):
            expected = component_eval_class(m, n)
            for comp in moduli_components(m, n):
                where = (f"m={m} n={n} "
                         f"(d,k,l)=({comp.d},{comp.k},{comp.ell})")
                res = cr_residual(comp.solution)
                residual.check(res < 1e-9, f"residual {res:g} at {where}")
                cls = homology_class(comp.hom)
                ar = symplectic_area(cls, comp.solution.psi.theta())
                area.check(ar > 0, f"area {ar:g} at {where}")
                cycle.check(eval_class_integrate(comp.solution) == expected,
                            f"cycle class mismatch at {where}")
    return [residual, area, cycle]


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.max < 1:
        print("error: --max must be at least 1", file=sys.stderr)
        return 2
    sweeps: List[_Sweep] = []
    if args.suite in ("identities", "all"):
        sweeps.extend(_verify_identities(args.max))
    if args.suite in ("oracle", "all"):
        sweeps.extend(_verify_oracle(args.max))
    if args.suite in ("geometry", "all"):
        sweeps.extend(_verify_geometry(args.max))
    failed = False
    for sweep in sweeps:
        status = "ok" if not sweep.failures else "FAIL"
        print(f"{sweep.name}: {sweep.checked} checks, "
              f"{len(sweep.failures)} failures [{status}]")
        if sweep.failures and not failed:
            failed = True
            print(f"first counterexample: {sweep.failures[0]}",
                  file=sys.stderr)
    return 1 if failed else 0


# ---------------------------------------------------------------------------
# baseline
# ---------------------------------------------------------------------------


def _cmd_baseline(args: argparse.Namespace) -> int:
    if args.lmax < 1:
        print("error: lmax must be at least 1", file=sys.stderr)
        return 2
    rows = []
    for ell in range(1, args.lmax + 1):
        count = count_sublattices_hnf(ell)
        s1 = sigma(1, ell)
        rows.append((ell, count, s1, count == s1))
    if args.format == "json":
        _emit_json({
            "schema_version": SCHEMA_VERSION,
            "command": "baseline",
            "rows": [
                {"ell": str(ell), "hnf_count": str(count),
                 "sigma1": str(s1), "equal": equal}
                for ell, count, s1, equal in rows
            ],
        })
    elif args.format == "csv":
        writer = csv.writer(sys.stdout)
        writer.writerow(["ell", "hnf_count", "sigma1", "equal"])
        for ell, count, s1, equal in rows:
            writer.writerow([ell, count, s1, str(equal).lower()])
    else:
        print(f"{'ell':>5} {'hnf':>8} {'sigma1':>8} {'equal':>6}")
        for ell, count, s1, equal in rows:
            print(f"{ell:>5} {count:>8} {s1:>8} {str(equal).lower():>6}")
    return 0


# ---------------------------------------------------------------------------
# entry points
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "text"),
                        default="text", help="output format (default text)")
    common.add_argument("--jobs", type=int, default=1, metavar="N",
                        help="parallelism hint; accepted for compatibility, "
                             "sweeps run sequentially and deterministically")

    parser = argparse.ArgumentParser(
        prog="ktgw",
        description="Exact genus-one family curve counts for the "
                    "Kodaira-Thurston manifold.",
        epilog=_CSV_DOC,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_gw = sub.add_parser("gw", parents=[common],
                          help="invariant of the class [a13, a23, a14, a24]")
    p_gw.add_argument("a13", type=int)
    p_gw.add_argument("a23", type=int)
    p_gw.add_argument("a14", type=int)
    p_gw.add_argument("a24", type=int)
    p_gw.add_argument("--method", choices=("closed", "enumerate", "both"),
                      default="both")
    p_gw.set_defaults(func=_cmd_gw)

    p_mod = sub.add_parser("moduli", parents=[common],
                           help="moduli components of [m, m, n, n]")
    p_mod.add_argument("m", type=int)
    p_mod.add_argument("n", type=int)
    p_mod.set_defaults(func=_cmd_moduli)

    p_ver = sub.add_parser("verify", parents=[common],
                           help="run a verification sweep")
    p_ver.add_argument("suite",
                       choices=("identities", "oracle", "geometry", "all"))
    p_ver.add_argument("--max", type=int, default=8,
                       help="sweep bound (default 8)")
    p_ver.set_defaults(func=_cmd_verify)

    p_base = sub.add_parser("baseline", parents=[common],
                            help="sublattice counts against sigma_1")
    p_base.add_argument("lmax", type=int)
    p_base.set_defaults(func=_cmd_baseline)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main_entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    main_entry()
