"""Command-line entry point: ``qdvolumes <subcommand> ...``."""

from __future__ import annotations

import argparse
import csv
import json
import sys
import time
import warnings

from . import cache, kernels
from .exact import fraction_str
from .partitions import WEIGHT_VARIANTS
from .strata import InvalidSignature, invariants, parse_signature, to_profile

EXIT_OK, EXIT_COMPUTE, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(args, payload, text_lines):
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _sig(args):
    try:
        return parse_signature(args.stratum)
    except InvalidSignature as exc:
        raise UsageError(f"invalid signature {args.stratum!r}: {exc}") from exc


def _series_json(s):
    return [fraction_str(c) for c in s.coeffs]


# -- subcommands --------------------------------------------------------------


def cmd_volume(args):
    from .volumes import compute_volume

    sig = _sig(args)
    res = compute_volume(
        sig, args.convention, args.method, args.weight_variant, args.weight_cap, args.gamma_order, args.route
    )
    _emit(args, res.to_json(), [res.pretty()])


def cmd_series(args):
    from .genfun import z_all_series, zprime_poly, zprime_series

    p = to_profile(_sig(args))
    s = (z_all_series if args.kind == "all" else zprime_series)(p, args.terms, args.weight_variant)
    payload = {"stratum": args.stratum, "kind": args.kind, "coefficients": _series_json(s)}
    lines = [f"{n}\t{c}" for n, c in enumerate(s.coeffs)]
    if args.fit:
        poly = zprime_poly(p, args.weight_variant)
        payload["quasimodular"] = poly.to_json()
        lines.append(f"# Z' = {poly!r}")
    _emit(args, payload, lines)


def cmd_connected(args):
    from .genfun import connected_expansion, connected_laurent, zconnected_poly, zconnected_series

    p = to_profile(_sig(args))
    s = zconnected_series(p, args.terms, args.weight_variant)
    payload = {"stratum": args.stratum, "coefficients": _series_json(s)}
    lines = [f"{n}\t{c}" for n, c in enumerate(s.coeffs)]
    if args.expansion:
        exp = connected_expansion(p)
        items = sorted(exp.items(), key=lambda kv: repr(kv[0]))
        payload["expansion"] = [{"parts": [str(q) for q in k], "coefficient": fraction_str(v)} for k, v in items]
        lines += [f"# {fraction_str(v)} * " + " ".join(str(q) for q in k) for k, v in items]
    if args.fit:
        poly = zconnected_poly(p, args.weight_variant)
        L = connected_laurent(p, args.weight_variant)
        dim = invariants(p).dim
        payload["quasimodular"] = poly.to_json()
        payload["leading"] = repr(L.coefficient(-dim))
        lines.append(f"# Z° = {poly!r}")
        lines.append(f"# [h^-{dim}] = {L.coefficient(-dim)!r}")
    _emit(args, payload, lines)


def cmd_covers(args):
    from .oracle import count_pillow_covers, count_torus_covers

    if args.torus is not None:
        try:
            mu = tuple(int(x) for x in args.torus.replace(",", " ").split())
        except ValueError as exc:
            raise UsageError(f"bad --torus profile {args.torus!r}") from exc
        if any(m < 2 for m in mu):
            raise UsageError("torus ramification parts must be >= 2")
        counts = [count_torus_covers(mu, d) for d in range(1, args.max_degree + 1)]
    else:
        if args.stratum is None:
            raise UsageError("covers needs --stratum or --torus")
        p = to_profile(_sig(args))
        counts = [count_pillow_covers(p, d, full=args.full) for d in range(2, args.max_degree + 1, 2)]
    rows = [
        (c.degree, c.all.numerator, c.all.denominator, c.connected.numerator, c.connected.denominator)
        for c in counts
    ]
    if args.json:
        print(json.dumps([dict(zip(("degree", "all_num", "all_den", "connected_num", "connected_den"), r)) for r in rows], indent=2))
        return
    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(["degree", "all_num", "all_den", "connected_num", "connected_den"])
    w.writerows(rows)


def cmd_estimate(args):
    from .oracle import estimate_volume_from_counts
    from .volumes import aez_factor, compute_volume

    sig = _sig(args)
    p = to_profile(sig)
    exact = None
    if not args.no_exact:
        exact = compute_volume(sig, "eo", "eo", args.weight_variant, args.weight_cap, route=args.route).value
    factor = aez_factor(sig)
    out = []
    for D in args.D:
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            est = estimate_volume_from_counts(p, D, args.source, None if exact is None else float(exact))
        for wmsg in caught:
            print(f"warning: {wmsg.message}", file=sys.stderr)
        out.append(
            {
                "D": D,
                "eo": est.value,
                "aez": est.value * float(factor),
                "exact_aez": None if exact is None else float(exact) * float(factor),
                "ratio": est.ratio,
                "source": est.source,
            }
        )
    lines = []
    for r in out:
        tail = "" if r["ratio"] is None else f"  exact={r['exact_aez']:.6g}  ratio={r['ratio']:.4f}"
        lines.append(f"D={r['D']}  estimate(aez)={r['aez']:.6g}{tail}")
    _emit(args, {"stratum": args.stratum, "estimates": out}, lines)


def cmd_closed_form(args):
    from .volumes import ClosedFormUnavailable, closed_form_volume, hyperelliptic_signature, hyperelliptic_volume

    if args.hyperelliptic:
        kind, k1, k2 = args.hyperelliptic
        try:
            v = hyperelliptic_volume(kind, int(k1), int(k2))
            sig = hyperelliptic_signature(kind, int(k1), int(k2))
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        label = f"hyperelliptic-{kind}"
        if kind == "3":
            print("note: raw formula; the table lists this component at half this value", file=sys.stderr)
    else:
        if args.stratum is None:
            raise UsageError("closed-form needs --stratum or --hyperelliptic")
        sig = _sig(args)
        try:
            v, label = closed_form_volume(sig)
        except ClosedFormUnavailable as exc:
            print(f"error: {exc}", file=sys.stderr)
            raise SystemExit(EXIT_COMPUTE)
    c, e = v.as_monomial()
    payload = {"stratum": sig.display(), "formula": label, "num": c.numerator, "den": c.denominator, "pi_power": e}
    _emit(args, payload, [f"{c} · π^{e}"])


def cmd_verify(args):
    from .table import TableFormatError, load_table, summarize, verify_table

    try:
        rows = load_table(args.table)
    except (OSError, TableFormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE if isinstance(exc, OSError) else EXIT_COMPUTE)
    t0 = time.perf_counter()
    reports = verify_table(rows, args.max_weight, args.weight_variant, args.workers, args.route)
    elapsed = time.perf_counter() - t0
    summary = summarize(reports)
    shown = [r for r in reports if args.show_skipped or r.status != "SKIP"]
    payload = {
        "summary": summary,
        "rows": [
            {
                "line": r.row.line,
                "stratum": r.row.stratum.display(),
                "status": r.status,
                "table": fraction_str(r.row.coefficient),
                "pi_power": r.row.pi_power,
                "computed": None if r.computed is None else fraction_str(r.computed),
                "detail": r.detail,
            }
            for r in shown
        ],
    }
    lines = [r.line() for r in shown]
    lines.append("summary: " + ", ".join(f"{k}={v}" for k, v in sorted(summary.items())))
    _emit(args, payload, lines)
    print(f"verified in {elapsed:.1f}s", file=sys.stderr)
    if summary.get("FAIL") or summary.get("ERROR"):
        raise SystemExit(EXIT_COMPUTE)


def cmd_validate_sums(args):
    from .oracle import validate_sum_identities

    checks = validate_sum_identities(args.N, args.lattice_N)
    payload = [
        {
            "name": c.name,
            "computed": c.computed,
            "expected": c.expected,
            "error": c.error,
            "tolerance": c.tolerance,
            "kind": c.kind,
            "informational": c.informational,
            "passed": c.passed,
        }
        for c in checks
    ]
    lines = []
    for c in checks:
        tag = ("PASS" if c.passed else "FAIL") + (" (info)" if c.informational else "")
        lines.append(f"{tag:12s} {c.name:32s} {c.kind} error={c.error:.3g} tol={c.tolerance:g}")
    _emit(args, payload, lines)
    if any(not c.passed and not c.informational for c in checks):
        raise SystemExit(EXIT_COMPUTE)


def cmd_cache(args):
    if args.action == "clear":
        n = cache.clear()
        kernels.clear_caches()
        _emit(args, {"removed": n}, [f"removed {n} entries"])
        return
    st = cache.stats()
    st["backend"] = kernels.BACKEND
    lines = [f"dir: {st['dir']}", f"backend: {kernels.BACKEND}"]
    lines += [f"{k}: {v}" for k, v in sorted(st["entries"].items())]
    _emit(args, st, lines)


# -- parser -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    from .oracle import ORACLE_MAX_DEGREE
    from .genfun import ROUTES
    from .volumes import CONVENTIONS, DEFAULT_WEIGHT_CAP, METHODS

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--weight-variant", choices=WEIGHT_VARIANTS, default="frobenius", help="bracket weight (debug)")

    stratum = argparse.ArgumentParser(add_help=False)
    stratum.add_argument("--stratum", help='singularity orders, e.g. "2,-1^2"')

    cap = argparse.ArgumentParser(add_help=False)
    cap.add_argument("--weight-cap", type=int, default=DEFAULT_WEIGHT_CAP)
    cap.add_argument(
        "--route", choices=ROUTES, default="characters", help="how Z' is obtained (interpolation reaches weight 8)"
    )

    ap = argparse.ArgumentParser(prog="qdvolumes", description="Exact volumes of strata of quadratic differentials.")
    sub = ap.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("volume", parents=[common, stratum, cap], help="volume of a stratum")
    p.add_argument("--convention", choices=CONVENTIONS, default="aez")
    p.add_argument("--method", choices=METHODS, default="auto")
    p.add_argument("--gamma-order", type=int, default=1, help="|Gamma| for the unnumbered convention")
    p.set_defaults(func=cmd_volume, need_stratum=True)

    p = sub.add_parser("series", parents=[common, stratum], help="coefficients of Z or Z'")
    p.add_argument("--kind", choices=("all", "prime"), default="prime")
    p.add_argument("--terms", type=int, default=12, help="truncation order in q")
    p.add_argument("--fit", action="store_true", help="also print the quasimodular polynomial")
    p.set_defaults(func=cmd_series, need_stratum=True)

    p = sub.add_parser("connected", parents=[common, stratum], help="coefficients of the connected series")
    p.add_argument("--terms", type=int, default=12)
    p.add_argument("--expansion", action="store_true", help="show the inversion coefficients")
    p.add_argument("--fit", action="store_true", help="fit and show the leading h-asymptotic")
    p.set_defaults(func=cmd_connected, need_stratum=True)

    p = sub.add_parser("covers", parents=[common, stratum], help="brute-force cover counts (CSV)")
    p.add_argument("--max-degree", type=int, default=6)
    p.add_argument("--torus", metavar="MU", help="count torus covers with ramification MU instead")
    p.add_argument("--full", action="store_true", help="enumerate every coordinate (slow check path)")
    p.set_defaults(func=cmd_covers, need_stratum=False, max_oracle=ORACLE_MAX_DEGREE)

    p = sub.add_parser("estimate", parents=[common, stratum, cap], help="lattice-count volume estimate")
    p.add_argument("--D", type=int, nargs="+", default=[4, 10])
    p.add_argument("--source", choices=("characters", "oracle"), default="characters")
    p.add_argument("--no-exact", action="store_true", help="skip the exact comparison")
    p.set_defaults(func=cmd_estimate, need_stratum=True)

    p = sub.add_parser("closed-form", parents=[common, stratum], help="genus 0 and hyperelliptic formulas")
    p.add_argument("--hyperelliptic", nargs=3, metavar=("TYPE", "K1", "K2"))
    p.set_defaults(func=cmd_closed_form, need_stratum=False)

    p = sub.add_parser("verify", parents=[common], help="check the shipped table against the pipeline")
    p.add_argument("--table", default=None, help="CSV path (default: packaged table)")
    p.add_argument("--max-weight", type=int, default=DEFAULT_WEIGHT_CAP)
    p.add_argument("--route", choices=ROUTES, default="characters")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--show-skipped", action="store_true")
    p.set_defaults(func=cmd_verify, need_stratum=False)

    p = sub.add_parser("validate-sums", parents=[common], help="numeric checks of the lattice-sum asymptotics")
    p.add_argument("--N", type=int, default=10 ** 6)
    p.add_argument("--lattice-N", type=int, default=20000)
    p.set_defaults(func=cmd_validate_sums, need_stratum=False)

    p = sub.add_parser("cache", parents=[common], help="inspect or clear the disk cache")
    p.add_argument("action", choices=("info", "clear"), nargs="?", default="info")
    p.set_defaults(func=cmd_cache, need_stratum=False)
    return ap


def _glue_negative_values(argv):
    # "--stratum -1^4" would otherwise be read as an unknown flag
    out = []
    it = iter(argv)
    for a in it:
        if a in ("--stratum", "--torus"):
            nxt = next(it, None)
            out.append(a if nxt is None else f"{a}={nxt}")
        else:
            out.append(a)
    return out


def main(argv=None) -> int:
    ap = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    args = ap.parse_args(_glue_negative_values(argv))
    sub = ap._subparsers._group_actions[0].choices[args.command]
    try:
        if getattr(args, "need_stratum", False) and not args.stratum:
            raise UsageError("--stratum is required")
        if getattr(args, "terms", 0) < 0 or getattr(args, "weight_cap", 0) < 0:
            raise UsageError("--terms and --weight-cap must be nonnegative")
        if args.command == "covers" and not 1 <= args.max_degree <= args.max_oracle:
            raise UsageError(f"--max-degree must be in 1..{args.max_oracle}")
        args.func(args)
    except UsageError as exc:
        sub.print_usage(sys.stderr)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:
        return int(exc.code or 0)
    except (ArithmeticError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_COMPUTE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
