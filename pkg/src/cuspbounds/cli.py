"""Command-line interface.

Subcommands: analyze (PD code), braid, pretzel, surgery, batch. Exit codes:
0 success, 1 parse or usage error, 2 bounds inapplicable (for example a
torus-degenerate diagram), so pipelines can filter non-hyperbolic inputs.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .errors import CuspBoundsError
from .pipeline import (
    STATUS_INAPPLICABLE,
    AnalysisRequest,
    parse_slope_list,
    run_analyze,
    run_batch,
    run_surgery,
)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_INAPPLICABLE = 2


class _Parser(argparse.ArgumentParser):
    # usage mistakes exit 1; status 2 is reserved for "bounds inapplicable"
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def _parse_triple(text: str) -> tuple[int, int, int]:
    parts = [part for part in text.replace(",", " ").split() if part]
    if len(parts) != 3:
        raise ValueError(f"expected three integers, got {text!r}")
    return tuple(int(part) for part in parts)  # type: ignore[return-value]


def _sig(x) -> str:
    return f"{float(x):.12g}"


def _print_bounds(report: dict, out) -> None:
    bounds = report.get("bounds")
    if bounds is None:
        return
    for key, label in (("meridian", "meridian"), ("lambda", "lambda"), ("cuspArea", "cusp area")):
        entry = bounds.get(key)
        if entry is not None:
            print(f"  {label} <= {_sig(entry['value'])}   [{entry['rule']}]", file=out)
    print(f"  consistent with six-theorem ceiling: {bounds['sixTheoremConsistent']}", file=out)


def _print_text(report: dict, out) -> None:
    print(f"status: {report['status']}", file=out)
    for diag in report.get("diagnostics", []):
        print(f"note: {diag}", file=out)
    inv = report.get("invariants")
    if inv is not None:
        delta = inv["delta"]
        print(
            f"  c={inv['c']} vA={inv['vA']} vB={inv['vB']} chiA={inv['chiA']} "
            f"chiB={inv['chiB']} gT={inv['gT']} delta={delta['num']}/{delta['den']}",
            file=out,
        )
        print(
            f"  adequate: A={inv['aAdequate']} B={inv['bAdequate']}"
            + (
                f"   twists: t={inv['t']} bigons={inv['vBi']} torusDegenerate={inv['torusDegenerate']}"
                if inv.get("t") is not None
                else ""
            ),
            file=out,
        )
    if report.get("surfacePair"):
        sp = report["surfacePair"]
        print(
            f"  surface pair: |chi| = {sp['absChi1']}, {sp['absChi2']}, "
            f"intersection = {sp['intersection']}",
            file=out,
        )
    if report.get("braidVerdict"):
        print(f"  braid criterion: {report['braidVerdict']}", file=out)
    _print_bounds(report, out)
    if report.get("criterion") is not None:
        crit = report["criterion"]
        print(f"  budget {_sig(crit['budget'])}: satisfied={crit['satisfied']}", file=out)
    for slope in report.get("slopes") or []:
        if "error" in slope:
            label = slope.get("slope", f"{slope.get('p')}/{slope.get('q')}")
            print(f"  slope {label}: error {slope['error']['message']}", file=out)
            continue
        window = slope.get("volumeWindow")
        window_text = (
            f" vol in ({_sig(window['lower'])}, {_sig(window['upper'])})" if window else ""
        )
        length = slope.get("lengthLower")
        length_text = f" length > {_sig(length)}" if length is not None else ""
        print(
            f"  slope {slope['p']}/{slope['q']}: nonExceptional={slope['nonExceptional']} "
            f"twoPi={slope['twoPiExceeded']}{length_text}{window_text}",
            file=out,
        )


def _emit(report: dict, fmt: str, out) -> None:
    if fmt == "json":
        json.dump(report, out, indent=2, sort_keys=True)
        out.write("\n")
    else:
        _print_text(report, out)


def _print_batch_text(report: dict, out) -> None:
    for row in report["rows"]:
        if row["status"] == "skip":
            print(f"  {row['name']}: skip ({row['note']})", file=out)
        else:
            print(
                f"  {row['name']}: {row['status']} bound={_sig(row['computedBound'])} "
                f"reference={_sig(row['referenceMeridian'])} slack={_sig(row['slack'])}",
                file=out,
            )
    summary = report["summary"]
    print(
        f"pass={summary['pass']} fail={summary['fail']} skip={summary['skip']}",
        file=out,
    )


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=("json", "text"), default="text")
    parser.add_argument("--budget", type=Fraction, help="length budget for the criterion check")
    parser.add_argument("--volume", type=float, help="complement volume for surgery windows")
    parser.add_argument("--slopes", type=parse_slope_list, default=(), help="p/q[,p/q...]")
    parser.add_argument(
        "--prime", action="store_true", help="assert the diagram is prime (caller's responsibility)"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="cuspbounds",
        description="Diagrammatic upper bounds on meridian length, lambda length, "
        "and cusp area of hyperbolic knots, plus surgery slope filters.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_analyze = sub.add_parser("analyze", help="analyze a PD code (or a raw surface pair)")
    p_analyze.add_argument("pd", nargs="?", help="PD code, e.g. 'X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]'")
    p_analyze.add_argument(
        "--pair", type=_parse_triple, help="raw |chi1|,|chi2|,intersection triple"
    )
    _add_common(p_analyze)

    p_braid = sub.add_parser("braid", help="analyze a braid closure, e.g. '3: s1^3 s2^-3'")
    p_braid.add_argument("word")
    _add_common(p_braid)

    p_pretzel = sub.add_parser("pretzel", help="bounds for the pretzel P(a,-b,-c), a,b,c odd > 1")
    p_pretzel.add_argument("params", type=_parse_triple, help="a,b,c")
    _add_common(p_pretzel)

    p_surgery = sub.add_parser("surgery", help="per-slope exclusion and volume windows")
    group = p_surgery.add_mutually_exclusive_group(required=True)
    group.add_argument("--delta", type=Fraction, help="the rational (2g-2)/c")
    group.add_argument("--crossings", type=int, help="crossing count (with --genus)")
    group.add_argument("--montesinos", type=int, help="Montesinos twist number t")
    p_surgery.add_argument("--genus", type=int, help="diagram genus (with --crossings)")
    _add_common(p_surgery)

    p_batch = sub.add_parser("batch", help="cross-check a CSV of tabulated meridian lengths")
    p_batch.add_argument("csv_path")
    p_batch.add_argument("--format", choices=("json", "text"), default="text")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = sys.stdout
    try:
        if args.command == "analyze":
            if (args.pd is None) == (args.pair is None):
                parser.error("analyze needs a PD code or --pair, not both")
            request = AnalysisRequest(
                pd=args.pd,
                pair=args.pair,
                budget=args.budget,
                volume=args.volume,
                slopes=args.slopes,
                prime_asserted=args.prime,
            )
            report = run_analyze(request)
        elif args.command == "braid":
            request = AnalysisRequest(
                braid=args.word,
                budget=args.budget,
                volume=args.volume,
                slopes=args.slopes,
                prime_asserted=args.prime,
            )
            report = run_analyze(request)
        elif args.command == "pretzel":
            request = AnalysisRequest(
                pretzel=args.params,
                budget=args.budget,
                volume=args.volume,
                slopes=args.slopes,
                prime_asserted=args.prime,
            )
            report = run_analyze(request)
        elif args.command == "surgery":
            if args.crossings is not None and args.genus is None:
                parser.error("--crossings needs --genus")
            if not args.slopes:
                parser.error("surgery needs --slopes")
            verdicts = run_surgery(
                slopes=args.slopes,
                delta=args.delta,
                c=args.crossings,
                g_t=args.genus,
                montesinos_t=args.montesinos,
                volume=args.volume,
            )
            report = {"status": "ok", "diagnostics": [], "slopes": verdicts}
        else:  # batch
            result = run_batch(args.csv_path)
            report = result.to_dict()
            if args.format == "json":
                _emit(report, "json", out)
            else:
                _print_batch_text(report, out)
            return EXIT_ERROR if result.failed else EXIT_OK
    except CuspBoundsError as exc:
        print(f"error[{exc.code}]: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except ValueError as exc:
        print(f"error[ValueError]: {exc}", file=sys.stderr)
        return EXIT_ERROR
    _emit(report, args.format, out)
    return EXIT_INAPPLICABLE if report.get("status") == STATUS_INAPPLICABLE else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
