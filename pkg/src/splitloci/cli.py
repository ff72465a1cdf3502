"""Command-line entry point: ``splitloci <command> [options]``.

Exit codes: 0 success, 1 violated verdict (``check --strict``), 2 failed
precondition or guard, 3 transcription checksum mismatch, 64 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from dataclasses import asdict, dataclass
from fractions import Fraction

from . import __version__, checks, counter, igusa, loci, verify, zeta
from .ffield import FieldError, make_field
from .wpoly import PolyError, change_field, dumps, loads, reduce_mod, weighted_degree

EXIT_OK, EXIT_VIOLATED, EXIT_PRECONDITION, EXIT_CHECKSUM, EXIT_USAGE = 0, 1, 2, 3, 64


class UsageError(Exception):
    pass


class ChecksumError(Exception):
    pass


@dataclass
class RunManifest:
    command: str
    parameters: dict
    polynomial_checksum: str | None = None
    field: str | None = None
    version: str = __version__
    elapsed: float = 0.0
    threads: int = 1


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _ints(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--format", choices=("json", "csv", "table"), default="table")
    p.add_argument("--threads", type=int, default=1, help="worker processes for counting")
    p.add_argument("--seed", type=int, default=0, help="seed for randomized samples")
    p.add_argument("--out", help="write the report here instead of stdout")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    ap = _Parser(prog="splitloci", description=__doc__.splitlines()[0])
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def counting(name, help_):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.add_argument("--locus", choices=("l2", "l3"), default="l2")
        sp.add_argument("--poly-file", help="count this polynomial (text format) instead of a locus")
        sp.add_argument("--p", type=int, required=True)
        sp.add_argument("--partitions", type=int, default=None)
        sp.add_argument("--guard", type=int, default=counter.DEFAULT_GUARD)
        return sp

    sp = counting("count", "point count with support-set rows")
    sp.add_argument("--k", type=int, default=1)
    sp.add_argument("--census", action="store_true", help="also count singular solutions")
    sp = counting("census", "singular-solution census")
    sp.add_argument("--k", type=int, default=1)
    sp = counting("sequence", "point counts over GF(p^k), k = 1..k-max")
    sp.add_argument("--k-max", type=int, required=True)

    sp = sub.add_parser("zeta-fit", parents=[common], help="fit a zeta numerator")
    sp.add_argument("--counts", type=_ints, required=True)
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--poles", type=_ints, default=None, help="pole reciprocals (default 1,q^2)")
    sp.add_argument("--deg", type=int, default=1)
    sp.add_argument("--convention", choices=zeta.CONVENTIONS, default="weil")

    sp = sub.add_parser("check", parents=[common], help="bounds and congruences for a count")
    sp.add_argument("--report", help="CountReport JSON produced by `count --format json`")
    sp.add_argument("--count", type=int)
    sp.add_argument("--q", type=int)
    sp.add_argument("--p", type=int)
    sp.add_argument("--d", type=int)
    sp.add_argument("--weights", type=_ints, default=[2, 4, 6, 10])
    sp.add_argument("--strict", action="store_true", help="exit 1 if any verdict is violated")

    sp = sub.add_parser("detect", parents=[common], help="split-Jacobian detection for one curve")
    sp.add_argument("--p", type=int, required=True, help="characteristic; 0 for rational coefficients")
    sp.add_argument("--k", type=int, default=1)
    sp.add_argument("--n", type=int, choices=(2, 3), required=True)
    sp.add_argument("--curve", required=True, help='"c6,c5,c4,c3,c2,c1,c0" (field elements by index)')

    sp = sub.add_parser("locus", help="embedded locus data")
    lsub = sp.add_subparsers(dest="locus_command", required=True, parser_class=_Parser)
    dp = lsub.add_parser("dump", parents=[common], help="print an embedded polynomial")
    dp.add_argument("--n", type=int, choices=(2, 3, 5), required=True)
    dp.add_argument("--form", choices=loci.FORMS, required=True)
    dp.add_argument("--p", type=int, default=None)

    sp = sub.add_parser("verify-paper", parents=[common], help="rerun the published figures")
    sp.add_argument("--suite", choices=sorted(verify.SUITES), default="quick")
    return ap


# --- output ----------------------------------------------------------------------------

def _emit(args, text: str):
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _json(obj) -> str:
    def default(o):
        if isinstance(o, Fraction):
            return o.numerator if o.denominator == 1 else str(o)
        raise TypeError(type(o).__name__)

    return json.dumps(obj, indent=2, default=default) + "\n"


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


ROW_COLUMNS = ("S", "N_S", "k_S", "contribution")


def _report_text(args, manifest: RunManifest, report: counter.CountReport) -> str:
    if args.format == "json":
        return _json({"manifest": asdict(manifest), "report": report.to_dict()})
    if args.format == "csv":
        return _csv(ROW_COLUMNS, [(" ".join(map(str, r.S)), r.N_S, r.k_S, r.contribution) for r in report.rows])
    lines = [f"{report.locus} over {report.field}", f"{'S':<12}{'N_S':>12}{'k_S':>6}{'contrib':>10}"]
    for r in report.rows:
        lines.append(f"{'{' + ','.join(map(str, r.S)) + '}':<12}{r.N_S:>12}{r.k_S:>6}{r.contribution:>10}")
    lines.append(f"points {report.total_points}   affine solutions {report.total_affine_solutions}"
                 f" (nonzero {report.nonzero_solutions})")
    if report.singular_solutions is not None:
        lines.append(f"singular {report.singular_solutions} ({report.singular_percent:.1f}%)")
    lines.append(f"elapsed {report.elapsed:.2f}s, {report.partition_count} partitions")
    return "\n".join(lines) + "\n"


# --- commands ----------------------------------------------------------------------------

def _require_checksums():
    bad = loci.checksum_mismatches()
    if bad:
        raise ChecksumError(f"embedded data changed: {', '.join(bad)}")


def _source_poly(args, f):
    if args.poly_file:
        with open(args.poly_file) as fh:
            P = loads(fh.read())
        name = args.poly_file
        return (reduce_mod(P, f) if P.field is None else change_field(P, f)), name
    n = int(args.locus[1])
    return loci.locus_polynomial(n, f), args.locus.upper()


def _counting_args(args):
    return dict(workers=max(1, args.threads), partitions=args.partitions or max(1, args.threads),
                guard=args.guard)


def cmd_count(args, census=False) -> int:
    _require_checksums()
    f = make_field(args.p, args.k)
    F, name = _source_poly(args, f)
    start = time.perf_counter()
    r = counter.count(F, f, census=census or getattr(args, "census", False), locus=name, **_counting_args(args))
    m = RunManifest(args.command, {"locus": name, "p": args.p, "k": args.k, "census": r.singular_solutions is not None},
                    F.checksum(), repr(f), elapsed=time.perf_counter() - start, threads=max(1, args.threads))
    _emit(args, _report_text(args, m, r))
    return EXIT_OK


def cmd_sequence(args) -> int:
    _require_checksums()
    start = time.perf_counter()
    if args.poly_file:
        with open(args.poly_file) as fh:
            source = loads(fh.read())
        name = args.poly_file
    else:
        source = loci.F2_integer() if args.locus == "l2" else 3
        name = args.locus.upper()
    seq, reports = counter.sequence(source, args.p, args.k_max, **_counting_args(args))
    m = RunManifest("sequence", {"locus": name, "p": args.p, "k_max": args.k_max}, None, f"GF({args.p}^k)",
                    elapsed=time.perf_counter() - start, threads=max(1, args.threads))
    if args.format == "json":
        text = _json({"manifest": asdict(m), "counts": seq, "reports": [r.to_dict() for r in reports]})
    elif args.format == "csv":
        text = _csv(("k", "q", "total_points", "total_affine_solutions"),
                    [(i + 1, r.q, r.total_points, r.total_affine_solutions) for i, r in enumerate(reports)])
    else:
        text = "\n".join(f"k={i + 1}  q={r.q:<6} points {r.total_points}" for i, r in enumerate(reports)) + "\n"
    _emit(args, text)
    return EXIT_OK


def cmd_zeta(args) -> int:
    poles = args.poles or [1, args.q ** 2]
    fit = zeta.general_fit(args.counts, poles, args.deg, args.convention, q=args.q)
    if args.format == "json":
        text = _json({"manifest": asdict(RunManifest("zeta-fit", vars_of(args))), "fit": fit.to_dict()})
    elif args.format == "csv":
        text = _csv(("k", "observed", "predicted", "residual"),
                    [(i + 1, c, fit.to_dict()["predicted"][i], fit.to_dict()["residuals"][i])
                     for i, c in enumerate(fit.counts)])
    else:
        text = (f"numerator ({fit.convention}): {fit.numerator_str()}\n"
                + "".join(f"k={i + 1}  observed {c}  predicted {p}  residual {r}\n"
                          for i, (c, p, r) in enumerate(zip(fit.counts, fit.predicted, fit.residuals))))
    _emit(args, text)
    return EXIT_OK


def vars_of(args) -> dict:
    return {k: v for k, v in vars(args).items() if k not in ("out", "format")}


def cmd_check(args) -> int:
    if args.report:
        with open(args.report) as fh:
            data = json.load(fh)
        rep = data.get("report", data)
        count, q = rep["total_points"], rep["q"]
        weights = rep["weights"]
        p = args.p or _char_of(q)
        d = args.d or _degree_for(rep["locus"])
        affine = rep["total_affine_solutions"]
    else:
        if None in (args.count, args.q, args.d):
            raise UsageError("check needs --report, or --count, --q and --d")
        count, q, weights, d, affine = args.count, args.q, args.weights, args.d, None
        p = args.p or _char_of(q)
    reports = [checks.aubry_check(count, d, weights, q), *checks.congruences(count, q, p, d, weights)]
    if args.format == "json":
        text = _json([r.to_dict() for r in reports])
    elif args.format == "csv":
        text = _csv(("name", "verdict", "observed", "expected", "reason"),
                    [(r.name, r.verdict, r.observed, r.expected, r.reason) for r in reports])
    else:
        text = "".join(f"{r.name:<14}{r.verdict:<16}observed {r.observed}  expected {r.expected}  [{r.reason}]\n"
                       for r in reports)
    _emit(args, text)
    if args.strict and any(r.verdict == checks.VIOLATED for r in reports):
        return EXIT_VIOLATED
    return EXIT_OK


def _char_of(q: int) -> int:
    p = 2
    while q % p:
        p += 1
    return p


def _degree_for(locus: str) -> int:
    key = locus.upper()
    if key in ("L2", "L3"):
        return {"L2": 30, "L3": 80}[key]
    raise UsageError(f"cannot infer the degree of {locus!r}; pass --d")


def cmd_detect(args) -> int:
    coeffs = _ints(args.curve)
    if len(coeffs) != 7:
        raise UsageError("--curve takes 7 coefficients c6..c0")
    if args.p == 0:
        curve = igusa.Genus2Curve.from_high(coeffs)
    else:
        f = make_field(args.p, args.k)
        curve = igusa.Genus2Curve.from_high([f.from_index(c % f.q) if f.k > 1 else f(c) for c in coeffs], f)
    res = igusa.detect(curve, args.n)
    d = res.to_dict()
    if args.format == "json":
        text = _json(d)
    elif args.format == "csv":
        text = _csv(("verdict", "J2", "J4", "J6", "J10", "fn_value"), [(d["verdict"], *d["igusa"], d["fn_value"])])
    else:
        text = f"{d['verdict']}  igusa {d['igusa']}  F{args.n} = {d['fn_value']}" + (
            f"  ({d['reason']})" if d["reason"] else "") + "\n"
    _emit(args, text)
    return EXIT_PRECONDITION if res.verdict == "unavailable" else EXIT_OK


def cmd_locus_dump(args) -> int:
    _require_checksums()
    if not loci.availability(args.n, args.form, args.p):
        raise loci.Unavailable(f"locus form unavailable for ({args.n}, {args.form}"
                               + (f", p={args.p})" if args.p else ")"))
    if args.form == "char0":
        P = loci.F2_integer()
    elif args.form == "mod-p":
        P = loci.F3_mod5()
    else:
        text = PARAM_TEXT[args.n]
        _emit(args, text)
        return EXIT_OK
    if args.format == "json":
        text = _json({"weights": P.weights, "field": repr(P.field) if P.field else None,
                      "degree": weighted_degree(P).degree, "checksum": P.checksum(),
                      "terms": [[list(e), c.coeffs[0] if P.field else c] for e, c in P]})
    else:
        text = dumps(P)
    _emit(args, text)
    return EXIT_OK


PARAM_TEXT = {
    3: "L3 is parametrized by (chi, psi): see splitloci.loci.l3_igusa\n",
    5: "L5 is parametrized by (a, b, z): see splitloci.loci.l5_curve and l5_uvw\n",
}


def cmd_verify(args) -> int:
    _require_checksums()
    outcomes, elapsed = verify.run(args.suite, args.seed)
    if args.format == "json":
        text = _json({"suite": args.suite, "elapsed": elapsed, "outcomes": [asdict(o) for o in outcomes]})
    elif args.format == "csv":
        text = _csv(("status", "name", "detail"), [(o.status, o.name, o.detail) for o in outcomes])
    else:
        text = "".join(o.line() + "\n" for o in outcomes)
        tally = {s: sum(o.status == s for o in outcomes) for s in (verify.PASS, verify.WARN, verify.FAIL)}
        text += f"{tally['PASS']} pass, {tally['WARN']} warn, {tally['FAIL']} fail in {elapsed:.1f}s\n"
    _emit(args, text)
    return EXIT_VIOLATED if any(o.status == verify.FAIL for o in outcomes) else EXIT_OK


def dispatch(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        if args.command == "count":
            return cmd_count(args)
        if args.command == "census":
            return cmd_count(args, census=True)
        if args.command == "sequence":
            return cmd_sequence(args)
        if args.command == "zeta-fit":
            return cmd_zeta(args)
        if args.command == "check":
            return cmd_check(args)
        if args.command == "detect":
            return cmd_detect(args)
        if args.command == "locus":
            return cmd_locus_dump(args)
        return cmd_verify(args)
    except UsageError as exc:
        print(f"splitloci: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ChecksumError as exc:
        print(f"splitloci: {exc}", file=sys.stderr)
        return EXIT_CHECKSUM
    except (loci.Unavailable, loci.PreconditionError, counter.GuardExceeded, FieldError, PolyError,
            zeta.FitError, ValueError) as exc:
        print(f"splitloci: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


def main():
    sys.exit(dispatch())


if __name__ == "__main__":
    main()
