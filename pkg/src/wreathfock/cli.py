"""Command-line front end.

Results go to stdout as JSON lines (or CSV for tables).  Exit codes:
0 success, 2 invalid input or size guard, 3 a verification check failed.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from typing import Sequence

from . import cache as cache_mod
from .characters import convolve_fast, graded_constants
from .exactnum import LaurentSeries
from .partitions import make_multipartition, mp_to_json
from .wreath import ClassFunction, GuardError, check_guard, convolve_bruteforce

EXIT_OK, EXIT_INVALID, EXIT_FAILED = 0, 2, 3


class UsageError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse exits 2 already; keep the message on one line
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def _json_arg(text: str):
    try:
        return json.loads(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"not valid JSON: {text!r}") from exc


def _int_list(text: str) -> list[int]:
    text = text.strip()
    if text.startswith("["):
        value = _json_arg(text)
    else:
        value = [s for s in text.split(",") if s.strip()]
    try:
        return [int(x) for x in value]
    except (TypeError, ValueError) as exc:
        raise argparse.ArgumentTypeError(f"expected a list of integers, got {text!r}") from exc


def _common(p: argparse.ArgumentParser, *, r=True, n=False, order=False, charge=False):
    if r:
        p.add_argument("--r", type=int, required=True, help="order of the cyclic group")
    if n:
        p.add_argument("--n", type=int, required=True)
    if order:
        p.add_argument("--order", type=int, default=6, help="truncation order in z")
    if charge:
        p.add_argument("--charge", type=_int_list, default=None, help="charge vector such as 0,1 or [0,1]; use --charge=-1,0 for a leading minus")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--cache-dir", default=None)
    p.add_argument("--seed", type=int, default=0)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="wreathfock", description="Exact computations for wreath products and their Fock space.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("chartable", help="character table of the wreath product")
    _common(p, n=True)

    p = sub.add_parser("convolve", help="convolution of two class functions")
    _common(p, n=True)
    p.add_argument("--f", type=_json_arg, required=True, help="class function as {\"type\": value} list or JSON")
    p.add_argument("--g", type=_json_arg, required=True)
    p.add_argument("--method", choices=("fast", "brute"), default="fast")

    p = sub.add_parser("structure-constants", help="top-degree class-sum structure constants")
    _common(p, n=True)
    p.add_argument("--full", action="store_true", help="all constants, not only the top degree")

    p = sub.add_parser("heisenberg", help="apply p_m(alpha) to a basis vector")
    _common(p, charge=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--alpha", required=True, help="diamond:i, sigma:i, c:i, rt or t")
    p.add_argument("--lambda", dest="lam", type=_json_arg, required=True)

    p = sub.add_parser("eigen", help="eigenvalue series of a diagonal operator on [lambda]")
    _common(p, order=True, charge=True)
    p.add_argument("--kind", choices=("H", "G", "Gtilde", "eps", "jm", "vertex", "chern"), required=True)
    p.add_argument("--k", type=int, default=0, help="color k (or i for eps, jm, vertex)")
    p.add_argument("--m", type=int, default=None, help="degree m for --kind chern")
    p.add_argument("--lambda", dest="lam", type=_json_arg, required=True)

    p = sub.add_parser("npoint", help="connected n-point function")
    _common(p, order=True)
    p.add_argument("--lambda", dest="lam", type=_json_arg, required=True)
    p.add_argument("--mu", type=_json_arg, required=True)
    p.add_argument("--ks", type=_int_list, required=True)
    p.add_argument("--method", choices=("direct", "reduced"), default="direct")

    p = sub.add_parser("tau", help="truncated tau function")
    _common(p, charge=True)
    p.add_argument("--order", type=int, default=4, help="total degree of the truncation")
    p.add_argument("--max-mode", type=int, default=2)
    p.add_argument("--x-modes", type=int, default=1)
    p.add_argument("--colors", type=_int_list, default=None)

    p = sub.add_parser("toda", help="residual of the lowest 2-Toda equation")
    _common(p)
    p.add_argument("--k", type=int, default=0)
    p.add_argument("--charges", type=_int_list, default=[-2, -1, 0, 1, 2],
                   help="charge list; write --charges=-1,0,1 when it starts with a minus sign")
    p.add_argument("--order", type=int, default=4)
    p.add_argument("--max-mode", type=int, default=2)
    p.add_argument("--x-modes", type=int, default=1)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", required=True, help="suite name, alias, or 'all'")
    p.add_argument("--r", type=int, default=None)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--order", type=int, default=None)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--format", choices=("json",), default="json")
    p.add_argument("--cache-dir", default=None)
    return parser


# --- helpers --------------------------------------------------------------------------


def _emit_json(out, obj) -> None:
    out.write(json.dumps(obj, sort_keys=False, separators=(",", ":")) + "\n")


def _emit_csv(out, rows) -> None:
    writer = csv.writer(out, lineterminator="\n")
    writer.writerows(rows)


def _positive(name: str, value: int, minimum: int = 1) -> None:
    if value is None or value < minimum:
        raise UsageError(f"--{name} must be at least {minimum}")


def _mp(data, r: int, name: str):
    try:
        lam = make_multipartition(data, r)
    except (TypeError, ValueError) as exc:
        raise UsageError(f"--{name}: {exc}") from exc
    if len(lam) != r:
        raise UsageError(f"--{name} must have {r} components")
    return lam


def _charge(args, r: int) -> tuple:
    charge = tuple(args.charge) if args.charge is not None else (0,) * r
    if len(charge) != r:
        raise UsageError(f"--charge must have {r} entries")
    return charge


def _class_function(data, r: int, n: int) -> ClassFunction:
    """Accept either the list form of ClassFunction.to_json or a plain {type: value} list of pairs."""
    from .exactnum import Cyclotomic
    from .partitions import mp_from_json

    try:
        if isinstance(data, list) and all(isinstance(d, dict) and "type" in d for d in data):
            values = {}
            for d in data:
                v = d["value"]
                if isinstance(v, dict):
                    v = Cyclotomic.from_json(v)
                elif isinstance(v, str):
                    v = Cyclotomic.parse(r, v)
                else:
                    v = Cyclotomic.rational(r, v)
                values[mp_from_json(d["type"])] = v
            return ClassFunction(r, n, values)
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"bad class function: {exc}") from exc
    raise UsageError("class functions are lists of {\"type\": [[...], ...], \"value\": ...}")


def _h1(text: str, r: int):
    from .fock import H1Vector

    name, _, idx = text.partition(":")
    if name in ("rt", "t") and not idx:
        return H1Vector.rt(r) if name == "rt" else H1Vector.t(r)
    if name in ("diamond", "sigma", "c") and idx.lstrip("-").isdigit():
        i = int(idx)
        top = r if name == "sigma" else r - 1
        if not 0 <= i <= top:
            raise UsageError(f"{name} index must lie in 0..{top}")
        return {"diamond": H1Vector.diamond, "sigma": H1Vector.sigma, "c": H1Vector.c}[name](r, i)
    raise UsageError(f"bad --alpha {text!r}; use diamond:i, sigma:i, c:i, rt or t")


def _series_json(s: LaurentSeries) -> dict:
    return {"series": s.to_string(), **s.to_json()}


# --- commands -----------------------------------------------------------------------------


def cmd_chartable(args, out) -> int:
    _positive("r", args.r)
    _positive("n", args.n, 0)
    check_guard(args.r, args.n)
    table = cache_mod.character_table(args.r, args.n, cache_mod.resolve_dir(args.cache_dir))
    if args.format == "csv":
        _emit_csv(out, table.to_csv_rows())
    else:
        _emit_json(out, table.to_json())
    return EXIT_OK


def cmd_convolve(args, out) -> int:
    _positive("r", args.r)
    _positive("n", args.n, 0)
    check_guard(args.r, args.n)
    f = _class_function(args.f, args.r, args.n)
    g = _class_function(args.g, args.r, args.n)
    h = convolve_bruteforce(f, g) if args.method == "brute" else convolve_fast(f, g)
    if args.format == "csv":
        _emit_csv(out, [["type", "value"]] + [[json.dumps(d["type"]), str(h(make_multipartition(d["type"], args.r)))]
                                                for d in h.to_json()])
    else:
        _emit_json(out, {"r": args.r, "n": args.n, "method": args.method, "result": h.to_json()})
    return EXIT_OK


def cmd_structure_constants(args, out) -> int:
    _positive("r", args.r)
    _positive("n", args.n, 0)
    check_guard(args.r, args.n)
    g = graded_constants(args.r, args.n)
    if args.full:
        from .characters import _triple_key

        rows = [
            {"rho": mp_to_json(a), "sigma": mp_to_json(b), "tau": mp_to_json(c), "value": v}
            for (a, b, c), v in sorted(g.full.items(), key=lambda kv: _triple_key(kv[0]))
        ]
    else:
        rows = g.to_json()
    if args.format == "csv":
        _emit_csv(out, [["rho", "sigma", "tau", "value"]] +
                  [[json.dumps(x["rho"]), json.dumps(x["sigma"]), json.dumps(x["tau"]), x["value"]] for x in rows])
    else:
        for x in rows:
            _emit_json(out, x)
    return EXIT_OK


def cmd_heisenberg(args, out) -> int:
    from .fock import FockVector, heis_apply, heis_zero

    _positive("r", args.r)
    lam = _mp(args.lam, args.r, "lambda")
    alpha = _h1(args.alpha, args.r)
    v = FockVector.basis(lam, _charge(args, args.r))
    w = heis_zero(alpha, v) if args.m == 0 else heis_apply(args.m, alpha, v)
    if args.format == "csv":
        _emit_csv(out, [["lambda", "coeff"]] + [[json.dumps(mp_to_json(k)), str(c)] for k, c in w.items()])
    else:
        _emit_json(out, w.to_json())
    return EXIT_OK


def cmd_eigen(args, out) -> int:
    from . import chern
    from .characters import content_eigen
    from .fock import vertex_composite_eigen

    _positive("r", args.r)
    _positive("order", args.order, 0)
    r = args.r
    lam = _mp(args.lam, r, "lambda")
    p = _charge(args, r)
    if not 0 <= args.k < r:
        raise UsageError(f"--k must lie in 0..{r - 1}")
    record = {"kind": args.kind, "k": args.k, "lambda": mp_to_json(lam), "charge": list(p)}
    if args.kind == "chern":
        if args.m is None or args.m < 0:
            raise UsageError("--kind chern needs --m >= 0")
        record["m"] = args.m
        record["value"] = str(chern.modified_chern_eigen(args.k, args.m, p, lam))
        _emit_json(out, record)
        return EXIT_OK
    if args.kind == "H":
        s = chern.hk_eigen(args.k, p, lam, args.order)
    elif args.kind == "G":
        s = chern.gk_eigen(args.k, p, lam, args.order)
    elif args.kind == "Gtilde":
        s = chern.gk_tilde_eigen(args.k, p, lam, args.order)
    elif args.kind == "eps":
        s = chern.eps_eigen(args.k, p, lam, args.order)
    elif args.kind == "jm":
        s = content_eigen(lam[args.k], r, args.order)
    else:
        s = vertex_composite_eigen(args.k, lam, args.order)
    if args.format == "csv":
        _emit_csv(out, [["exponent", "coeff"]] + [[e, str(c)] for e, c in s.items()])
    else:
        record.update(_series_json(s))
        _emit_json(out, record)
    return EXIT_OK


def cmd_npoint(args, out) -> int:
    from .correlators import npoint_direct, npoint_reduced

    _positive("r", args.r)
    _positive("order", args.order, 0)
    lam = _mp(args.lam, args.r, "lambda")
    mu = _mp(args.mu, args.r, "mu")
    if not args.ks:
        raise UsageError("--ks needs at least one color")
    if any(not 0 <= k < args.r for k in args.ks):
        raise UsageError(f"--ks entries must lie in 0..{args.r - 1}")
    fn = npoint_reduced if args.method == "reduced" else npoint_direct
    res = fn(lam, mu, args.ks, args.order)
    record = res.to_json()
    record["method"] = args.method
    record["text"] = res.series.to_string()
    _emit_json(out, record)
    return EXIT_OK


def cmd_tau(args, out) -> int:
    from .correlators import tau_truncated

    _positive("r", args.r)
    _positive("order", args.order, 0)
    charge = _charge(args, args.r)
    if args.colors is not None and any(not 0 <= k < args.r for k in args.colors):
        raise UsageError(f"--colors entries must lie in 0..{args.r - 1}")
    res = tau_truncated(charge, args.order, args.max_mode, args.x_modes, colors=args.colors)
    record = res.to_json()
    record["text"] = res.series.to_string()
    _emit_json(out, record)
    return EXIT_OK


def cmd_toda(args, out) -> int:
    from .correlators import calibrate_toda, toda_residual

    _positive("r", args.r)
    _positive("order", args.order, 0)
    if not 0 <= args.k < args.r:
        raise UsageError(f"--k must lie in 0..{args.r - 1}")
    eps, reflect = calibrate_toda(args.k, args.r, args.order, args.max_mode)
    res = toda_residual(args.k, args.r, args.charges, args.order, args.max_mode, args.x_modes, eps, reflect)
    ok = True
    for n, s in res.items():
        ok = ok and s.is_zero()
        _emit_json(out, {"r": args.r, "k": args.k, "charge": n, "epsilon": eps, "reflect": reflect,
                         "residual_terms": len(s.terms), "residual": s.to_string()})
    return EXIT_OK if ok else EXIT_FAILED


def cmd_verify(args, out) -> int:
    from .verify import SUITES, resolve, run_suite

    names = list(SUITES) if args.suite == "all" else [resolve(args.suite)]
    ok = True
    for name in names:
        report = run_suite(name, args.r, args.n, args.order, args.seed)
        ok = ok and report["ok"]
        _emit_json(out, report)
    return EXIT_OK if ok else EXIT_FAILED


COMMANDS = {
    "chartable": cmd_chartable,
    "convolve": cmd_convolve,
    "structure-constants": cmd_structure_constants,
    "heisenberg": cmd_heisenberg,
    "eigen": cmd_eigen,
    "npoint": cmd_npoint,
    "tau": cmd_tau,
    "toda": cmd_toda,
    "verify": cmd_verify,
}


def run(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args, out)
    except GuardError as exc:
        print(f"wreathfock: size guard: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (UsageError, ValueError) as exc:
        print(f"wreathfock: {exc}", file=sys.stderr)
        return EXIT_INVALID


def main(argv: Sequence[str] | None = None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
