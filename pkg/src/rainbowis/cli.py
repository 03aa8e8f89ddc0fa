"""Command-line front end: ``rainbowis {enumerate,fvalue,verify,solve}``.

Exit status: 0 everything verified, 1 a claim was refuted, 2 inconclusive
(cap or time budget), 3 bad input or usage.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path
from typing import Any, Sequence

from .cache import ResultCache
from .constructive import solve_two_jump, solve_two_regular
from .errors import ContractViolation, DescriptorParseError, PreconditionError, RainbowError
from .fsearch import FResult, f_value
from .graph import Degree2Graph, parse_descriptor
from .gris import gris, rainbow_cycle_n_minus_1
from .indsets import Collection, JumpSet, enumerate_ind_sets, enumerate_jump_sets, jump_collection
from .rainbow import RainbowAssignment, find_rainbow, verify_rainbow
from .verify import CLAIMS, DEFAULT_BUDGET, FAIL, verify_theorem_range

CERTIFICATE_VERSION = 1

EXIT_OK, EXIT_REFUTED, EXIT_INCONCLUSIVE, EXIT_ERROR = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def parse_range(text: str) -> list[int]:
    """``"2..5"`` (inclusive), ``"2,3,7"`` or ``"4"``."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            a, b = int(lo), int(hi)
            if a > b:
                raise argparse.ArgumentTypeError(f"range {text!r} is not ascending")
            return list(range(a, b + 1))
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a range: {text!r}") from None


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be positive, got {v}")
    return v


def _nonnegative(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative, got {v}")
    return v


# -- rendering --------------------------------------------------------------------


def render(headers: Sequence[str], rows: Sequence[Sequence[Any]], fmt: str, payload: Any) -> str:
    """Render ``rows`` as an aligned table or CSV, or ``payload`` as JSON."""
    if fmt == "json":
        return json.dumps(payload, indent=2, sort_keys=True)
    cells = [[_cell(v) for v in row] for row in rows]
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(headers)
        w.writerows(cells)
        return buf.getvalue().rstrip("\n")
    widths = [len(h) for h in headers]
    for row in cells:
        widths = [max(w, len(c)) for w, c in zip(widths, row)]
    lines = ["  ".join(h.ljust(w) for h, w in zip(headers, widths))]
    lines.append("  ".join("-" * w for w in widths))
    lines += ["  ".join(c.ljust(w) for c, w in zip(row, widths)) for row in cells]
    return "\n".join(line.rstrip() for line in lines)


def _cell(v: Any) -> str:
    if v is None:
        return "-"
    if isinstance(v, (list, tuple, dict)):
        return json.dumps(v, separators=(",", ":"))
    return str(v)


# -- enumerate --------------------------------------------------------------------


def cmd_enumerate(args: argparse.Namespace) -> int:
    g = parse_descriptor(args.graph)
    if args.jump is not None:
        if len(g.components) != 1 or g.components[0].kind != "C":
            raise UsageError("--jump needs a single cycle C<t>")
        jsets = enumerate_jump_sets(g.vertex_count, args.jump, args.n)
        listing = [js.members for js in jsets]
        starts = [js.start for js in jsets]
    else:
        listing = [s.labels() for s in enumerate_ind_sets(g, args.n)]
        starts = None
    payload: dict[str, Any] = {"graph": g.descriptor, "n": args.n, "count": len(listing), "sets": listing}
    if args.jump is not None:
        payload["jump"] = args.jump
        payload["starts"] = starts
    if args.format == "json":
        print(render([], [], "json", payload))
    else:
        print(render(["index", "set"], [[k, s] for k, s in enumerate(listing, start=1)], args.format, payload))
        if args.format == "table":
            print(f"count: {len(listing)}")
    return EXIT_OK


# -- fvalue -----------------------------------------------------------------------


def _cache_for(args: argparse.Namespace) -> ResultCache | None:
    if args.no_cache:
        return None
    return ResultCache(args.cache)


def cmd_fvalue(args: argparse.Namespace) -> int:
    g = parse_descriptor(args.graph)
    cache = _cache_for(args)
    res: FResult | None = None
    cached = False
    if cache is not None and not args.recompute:
        res = cache.lookup(g.descriptor, args.n, args.m)
        cached = res is not None
    if res is None:
        res = f_value(g, args.n, args.m, args.cap, workers=args.workers, time_budget=args.time_budget)
        if cache is not None and not res.inconclusive:
            cache.store(res)
    rec = res.to_record()
    rec["cached"] = cached
    rows = [
        ["graph", res.graph],
        ["n", res.n],
        ["m", res.m],
        ["f", res.f_value],
        ["inconclusive", res.inconclusive],
        ["witness", None if res.witness is None else res.witness.to_lists()],
        ["cached", cached],
    ]
    rows += [[f"stats.{k}", v] for k, v in sorted(res.stats.items())]
    print(render(["field", "value"], rows, args.format, rec))
    if res.inconclusive:
        print(f"inconclusive: f >= {res.f_value}", file=sys.stderr)
        return EXIT_INCONCLUSIVE
    return EXIT_OK


# -- verify -----------------------------------------------------------------------


def cmd_verify(args: argparse.Namespace) -> int:
    report = verify_theorem_range(
        args.claim,
        args.n,
        args.t,
        t_max=args.t_max,
        graphs=args.graph,
        time_budget=args.time_budget,
        workers=args.workers,
        jobs=args.jobs,
        cache=_cache_for(args),
        recompute=args.recompute,
    )
    rows = [
        [c.claim, c.params, c.expected, c.observed, c.status, round(c.seconds, 3)] for c in report.cells
    ]
    print(render(["claim", "params", "expected", "observed", "status", "seconds"], rows, args.format,
                 report.to_dict()))
    if args.format == "table":
        counts = ", ".join(f"{k}={v}" for k, v in sorted(report.counts().items()))
        print(f"{report.claim}: {report.status} ({counts})")
    for c in report.cells:
        if c.status == FAIL:
            print(f"REFUTED {c.claim} at {c.params}: expected {c.expected}, observed {c.observed}", file=sys.stderr)
            print(json.dumps(c.detail, sort_keys=True), file=sys.stderr)
    return report.exit_code


# -- solve ------------------------------------------------------------------------


def _read_collection(args: argparse.Namespace) -> Collection:
    if args.collection is not None and args.collection_file is not None:
        raise UsageError("give --collection or --collection-file, not both")
    if args.collection_file is not None:
        text = Path(args.collection_file).read_text(encoding="utf-8")
    elif args.collection is not None:
        text = args.collection
    else:
        raise UsageError("this solver needs --collection or --collection-file")
    return Collection.from_json(text)


def _single_cycle(g: Degree2Graph) -> int:
    if len(g.components) != 1 or g.components[0].kind != "C":
        raise UsageError(f"this solver needs a single cycle, got {g.descriptor}")
    return g.vertex_count


def certificate(
    r: RainbowAssignment | None,
    g: Degree2Graph,
    f: Collection,
    solver: str,
    m: int,
    *,
    ordering: Sequence[int] | None = None,
    greedy_colors: Sequence[int] | None = None,
    trace: Sequence[dict[str, Any]] | None = None,
) -> dict[str, Any]:
    return {
        "version": CERTIFICATE_VERSION,
        "solver": solver,
        "graph": g.descriptor,
        "m": m,
        "ordering": None if ordering is None else list(ordering),
        "collection": f.to_lists(),
        "rainbow": None if r is None else [[v, c] for v, c in r.pairs],
        "greedy_colors": None if greedy_colors is None else sorted(greedy_colors),
        "trace": [] if trace is None else list(trace),
    }


def cmd_solve(args: argparse.Namespace) -> int:
    g = parse_descriptor(args.graph)
    solver = args.solver
    extra: dict[str, Any] = {}
    if solver == "two-jump":
        t = _single_cycle(g)
        if not args.starts:
            raise UsageError("two-jump needs --starts")
        n = args.n if args.n is not None else len(args.starts)
        jsets = [JumpSet(t, s, 2, n) for s in args.starts]
        f = jump_collection(jsets)
        r = solve_two_jump(t, n, jsets)
        m = n
        extra["trace"] = list(r.log)
        g = r.graph
    else:
        f = _read_collection(args)
        f.validate(g)
        if solver == "gris":
            ordering = args.ordering or list(range(1, g.vertex_count + 1))
            res = gris(g, ordering, f)
            r, m = res.rainbow, len(res.rainbow)
            extra = {
                "ordering": res.ordering,
                "greedy_colors": res.greedy_colors,
                "trace": [s.to_dict() for s in res.trace],
            }
        elif solver == "cycle":
            t = _single_cycle(g)
            n = args.n if args.n is not None else (len(f.sets[0]) if f.sets else 0)
            r = rainbow_cycle_n_minus_1(t, f, n)
            m = n - 1
        elif solver == "two-regular":
            n = args.n if args.n is not None else (g.vertex_count + 1) // 2
            r = solve_two_regular(g, n, f)
            m = n - 1
            extra["trace"] = list(r.log)
        else:
            if args.m is None:
                raise UsageError("find-rainbow needs --m")
            m = args.m
            r = find_rainbow(g, f, m)

    if r is not None and not verify_rainbow(g, f, r, m):
        raise RainbowError("internal error: certificate failed re-verification")
    cert = certificate(r, g, f, solver, m, **extra)
    rows = [[v, c] for v, c in (cert["rainbow"] or [])]
    print(render(["vertex", "color"], rows, args.format, cert))
    if args.format == "table":
        if r is None:
            print(f"no rainbow independent {m}-set")
        else:
            print(f"verified rainbow independent {m}-set R = {sorted(v for v, _ in r.pairs)}")
    if args.output:
        Path(args.output).write_text(json.dumps(cert, indent=2, sort_keys=True) + "\n", encoding="utf-8")
    return EXIT_OK


# -- parser -----------------------------------------------------------------------


def _add_cache_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--cache", help="result cache path (default: $RAINBOW_CACHE or ~/.cache/rainbowis/fvalues.jsonl)")
    p.add_argument("--no-cache", action="store_true", help="neither read nor write the cache")
    p.add_argument("--recompute", action="store_true", help="ignore cached results")
    p.add_argument("--workers", type=_positive, default=1, help="processes for one f-value search")
    p.add_argument("--time-budget", type=float, default=DEFAULT_BUDGET, help="seconds per search or grid cell")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="rainbowis", description="Rainbow independent sets in graphs of maximum degree two.")
    formats = ("table", "json", "csv")
    parser.add_argument("--format", choices=formats, default="table")
    # --format is also accepted after the subcommand
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=formats, default=argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", parents=[common], help="list the independent n-sets (or k-jump n-sets) of a graph")
    p.add_argument("--graph", required=True)
    p.add_argument("--n", type=_nonnegative, required=True)
    p.add_argument("--jump", type=int, help="list k-jump sets of a cycle instead")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("fvalue", parents=[common], help="compute f_G(n, m) exactly")
    p.add_argument("--graph", required=True)
    p.add_argument("--n", type=_nonnegative, required=True)
    p.add_argument("--m", type=_nonnegative, required=True)
    p.add_argument("--cap", type=_positive, help="largest collection size searched (default 3n)")
    _add_cache_flags(p)
    p.set_defaults(func=cmd_fvalue)

    p = sub.add_parser("verify", parents=[common], help="check a claim over a parameter grid")
    p.add_argument("--claim", required=True, choices=sorted(CLAIMS))
    p.add_argument("--n", type=parse_range, help="e.g. 2..5 or 2,3")
    p.add_argument("--t", type=parse_range, help="e.g. 5..16")
    p.add_argument("--t-max", type=_positive)
    p.add_argument("--graph", action="append", help="graph for thm-1.2 (repeatable)")
    p.add_argument("--jobs", type=_positive, default=1, help="grid cells run in parallel")
    _add_cache_flags(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("solve", parents=[common], help="run a solver and emit a verified certificate")
    p.add_argument("solver", choices=("gris", "cycle", "two-jump", "two-regular", "find-rainbow"))
    p.add_argument("--graph", required=True)
    p.add_argument("--collection", help="inline JSON list of vertex lists")
    p.add_argument("--collection-file", help="file holding the JSON list of vertex lists")
    p.add_argument("--n", type=_positive)
    p.add_argument("--m", type=_nonnegative)
    p.add_argument("--ordering", type=parse_range, help="vertex order for gris, e.g. 3,1,2,4,5")
    p.add_argument("--starts", type=parse_range, help="start vertices of the 2-jump sets, e.g. 1,1,3,3")
    p.add_argument("--output", help="also write the certificate JSON here")
    p.set_defaults(func=cmd_solve)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DescriptorParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        print(f"  {exc.descriptor}\n  {' ' * exc.position}^", file=sys.stderr)
    except ContractViolation as exc:
        print(f"CONTRACT VIOLATION (a guaranteed result failed): {exc}", file=sys.stderr)
        return EXIT_REFUTED
    except PreconditionError as exc:
        print(f"error: precondition {exc.clause!r} violated: {exc}", file=sys.stderr)
    except (RainbowError, UsageError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
    return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
