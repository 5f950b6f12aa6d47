"""Command-line front end: ``twosquares decompose|enumerate|verify|render``.

Exit codes: 0 success, 1 internal invariant failure (or a failed
verification), 2 invalid input, 3 overflow.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Sequence

from . import partition, render, solver, windmill
from .arith import check_p, primes_1mod4
from .errors import ArithmeticOverflow, InvalidInput, InvariantViolation
from .partition import Quad
from .windmill import Triple

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_INPUT = 2
EXIT_OVERFLOW = 3

ROUTES = ("zagier", "christopher", "oracle")


def _int_tuple(text: str, n: int) -> tuple[int, ...]:
    try:
        values = tuple(int(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected {n} comma-separated integers, got {text!r}") from None
    if len(values) != n:
        raise argparse.ArgumentTypeError(f"expected {n} comma-separated integers, got {text!r}")
    return values


def _range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    try:
        bounds = (int(lo), int(hi)) if sep else (int(lo), int(lo))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected LO..HI, got {text!r}") from None
    if bounds[0] > bounds[1]:
        raise argparse.ArgumentTypeError(f"empty range {text!r}: LO must not exceed HI")
    return bounds


def create_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twosquares",
        description="Write primes p = 1 (mod 4) as a sum of two squares via involutions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    dec = sub.add_parser("decompose", help="write p as a^2 + b^2")
    dec.add_argument("p", type=int)
    dec.add_argument("--route", choices=ROUTES + ("all",), default="all")
    dec.add_argument("--format", choices=("human", "json", "csv"), default="human")

    enum_ = sub.add_parser("enumerate", help="list S_p or P2^p")
    enum_.add_argument("p", type=int)
    enum_.add_argument("--set", dest="which", choices=("S", "P2"), default="S")
    enum_.add_argument("--strata", action="store_true", help="split P2^p by comparing f1 and f2")
    enum_.add_argument("--format", choices=("human", "json", "csv"), default="human")

    ver = sub.add_parser("verify", help="check every proof obligation over a range of primes")
    ver.add_argument("range", type=_range, help="LO..HI (inclusive)")
    ver.add_argument("--format", choices=("human", "json", "csv"), default="human")
    ver.add_argument("--jobs", type=int, default=1, help="worker processes")

    ren = sub.add_parser("render", help="draw windmills or Young diagrams")
    what = ren.add_mutually_exclusive_group(required=True)
    what.add_argument("-p", type=int, dest="p", help="draw every windmill of S_p")
    what.add_argument("--triple", type=lambda s: _int_tuple(s, 3))
    what.add_argument("--quad", type=lambda s: _int_tuple(s, 4))
    ren.add_argument("--pairs", action="store_true", help="with -p: group windmills by zag partner")
    ren.add_argument("--conjugate", action="store_true", help="with --quad: draw the conjugate too")
    ren.add_argument("--format", choices=("ascii", "svg"), default="ascii")
    ren.add_argument("-o", dest="output", help="output path (default: stdout)")
    return parser


# -- commands -----------------------------------------------------------------


def cmd_decompose(args, out) -> int:
    w = solver.check_prime_1mod4(args.p)
    routes = ROUTES if args.route == "all" else (args.route,)
    results = []
    for route in routes:
        if route == "zagier":
            results.append(solver.decompose_zagier(w))
        elif route == "christopher":
            results.append(solver.decompose_christopher(w))
        else:
            results.append(solver.decompose_oracle(w.p))
    if args.format == "json":
        payload = [d.to_dict() for d in results]
        json.dump(payload[0] if len(payload) == 1 else payload, out)
        out.write("\n")
    elif args.format == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["p", "a", "b", "route"])
        for d in results:
            writer.writerow([d.p, d.a, d.b, d.route.value])
    else:
        for d in results:
            via = "" if d.witness is None else f", fixed point {tuple(d.witness)}"
            out.write(f"{d.p} = {d.a}^2 + {d.b}^2  [{d.route.value}{via}]\n")
    return EXIT_OK


def cmd_enumerate(args, out) -> int:
    p = check_p(args.p)
    if args.which == "S":
        fields = list(Triple._fields)
        rows = [tuple(t) for t in windmill.enumerate_S(p)]
    else:
        fields = list(Quad._fields)
        rows = [tuple(q) for q in partition.enumerate_P2_array(p).tolist()]
    strata = None
    if args.strata:
        if args.which != "P2":
            raise InvalidInput("--strata only applies to --set P2")
        strata = {s.value: 0 for s in partition.Stratum}
        for q in rows:
            strata[partition.stratum_of(Quad(*q)).value] += 1

    if args.format == "json":
        payload = {"p": p, "set": args.which, "fields": fields, "count": len(rows), "elements": [list(r) for r in rows]}
        if strata is not None:
            payload["strata"] = strata
        json.dump(payload, out)
        out.write("\n")
    elif args.format == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(fields + (["stratum"] if strata is not None else []))
        for r in rows:
            extra = [partition.stratum_of(Quad(*r)).value] if strata is not None else []
            writer.writerow(list(r) + extra)
    else:
        for r in rows:
            out.write(" ".join(str(v) for v in r) + "\n")
        out.write(f"|{args.which}_{p}| = {len(rows)}\n")
        if strata is not None:
            for name, count in strata.items():
                out.write(f"{name.upper()}: {count}\n")
    return EXIT_OK


def _verify_one(p: int) -> solver.VerificationReport:
    return solver.verify_pipeline(solver.check_prime_1mod4(p))


def cmd_verify(args, out) -> int:
    lo, hi = args.range
    primes = primes_1mod4(lo, hi)
    if args.jobs > 1 and len(primes) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            reports = list(pool.map(_verify_one, primes))
    else:
        reports = [_verify_one(p) for p in primes]
    reports.sort(key=lambda r: r.p)
    all_ok = all(r.passed for r in reports)

    if args.format == "json":
        json.dump(
            {
                "lo": lo,
                "hi": hi,
                "primes_checked": len(reports),
                "all_passed": all_ok,
                "results": [r.to_dict() for r in reports],
            },
            out,
        )
        out.write("\n")
    elif args.format == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["p", "passed", "S", "P2", "LESS", "EQUAL", "GREATER", "a", "b"])
        for r in reports:
            d = r.decompositions.get("oracle")
            writer.writerow(
                [r.p, r.passed]
                + [r.sizes[k] for k in ("S", "P2", "LESS", "EQUAL", "GREATER")]
                + ([d.a, d.b] if d else ["", ""])
            )
    else:
        if not reports:
            out.write(f"no primes p = 1 (mod 4) in {lo}..{hi}; nothing to check\n")
        else:
            out.write(f"{'p':>8} {'|S|':>6} {'|P2|':>10} {'LESS':>9} {'EQUAL':>7} {'GREATER':>9}  a^2+b^2   result\n")
            for r in reports:
                d = r.decompositions.get("oracle")
                ab = f"{d.a}^2+{d.b}^2" if d else "-"
                s = r.sizes
                status = "pass" if r.passed else "FAIL: " + ", ".join(r.failed)
                out.write(
                    f"{r.p:>8} {s['S']:>6} {s['P2']:>10} {s['LESS']:>9} {s['EQUAL']:>7} {s['GREATER']:>9}  {ab:<9} {status}\n"
                )
            out.write(f"{len(reports)} primes checked, {'all passed' if all_ok else 'FAILURES'}\n")
    return EXIT_OK if all_ok else EXIT_INTERNAL


def cmd_render(args, out) -> int:
    fmt = args.format
    if args.triple is not None:
        doc = render.render_windmill(Triple(*args.triple), fmt)
    elif args.quad is not None:
        doc = render.render_young(Quad(*args.quad), with_conjugate=args.conjugate, fmt=fmt)
    else:
        p = check_p(args.p)
        if args.pairs:
            doc = render.render_pairs(p, fmt)
        else:
            panels = [render.windmill_panel(t) for t in windmill.enumerate_S(p)]
            if not panels:
                raise InvalidInput(f"S_{p} is empty; nothing to draw")
            doc = render.to_svg([panels], True) if fmt == "svg" else render.to_ascii([panels], True)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(doc)
    else:
        out.write(doc)
    return EXIT_OK


COMMANDS = {
    "decompose": cmd_decompose,
    "enumerate": cmd_enumerate,
    "verify": cmd_verify,
    "render": cmd_render,
}


def main(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = create_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    # buffer so nothing is printed when the command fails
    buf = io.StringIO()
    try:
        code = COMMANDS[args.command](args, buf)
    except ArithmeticOverflow as exc:
        err.write(f"error: {exc}\n")
        return EXIT_OVERFLOW
    except InvariantViolation as exc:
        err.write(f"internal error: {exc}\n")
        return EXIT_INTERNAL
    except InvalidInput as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INPUT
    except OSError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INPUT
    out.write(buf.getvalue())
    return code


if __name__ == "__main__":
    sys.exit(main())
