"""
Command Line Front End

Main entry point for the scroll toolkit: analyze, implicitize, lift and
verify a curve given in a curve file, or run the acceptance battery.

    python -m cli.main analyze curve.txt --json
    python -m cli.main lift --curve "[1,0,0];[0,1,0];[0,0,1]" --chart 02
    python -m cli.main battery --seed 7

Exit status is 0 on success, 1 on a domain error (its code is printed on
stderr) or a failed verification, and 2 on parse, usage or configuration
errors.
"""

import argparse
import logging
import sys
from contextlib import redirect_stderr
from pathlib import Path
from typing import List, Optional, TextIO, Tuple

# Add parent directory to path for imports
sys.path.insert(0, str(Path(__file__).parent.parent))

from config.scroll_config import get_scroll_config
from models.errors import CurveAlgebraError, CurveParseError
from models.schemas import AnalysisReport, BatteryReport, ErrorReport, VerificationReport
from services.analysis import CurveAnalyzer
from services.battery import AcceptanceBattery
from utils.formatting import CurveInput, parse_curve_text, parse_form_list


logger = logging.getLogger(__name__)

CHARTS = {"01": (0, 1), "02": (0, 2), "12": (1, 2)}


def configure_logging(level: str, stream: TextIO) -> None:
    """Configure logging once for the whole process"""
    logging.basicConfig(
        level=getattr(logging, level.upper(), logging.WARNING),
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        stream=stream,
        force=True,
    )


def positive_int(text: str) -> int:
    """argparse type for counts that must be at least 1"""
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid integer: {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be at least 1, got {value}")
    return value


def non_negative_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid integer: {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="scroll-toolkit",
        description="mu-bases, implicitization and scroll lifts of rational plane curves",
    )
    parser.add_argument("--log-level", default=None, help="Logging level (default from SCROLL_LOG_LEVEL)")
    subparsers = parser.add_subparsers(dest="command", required=True)

    def curve_command(name: str, help_text: str) -> argparse.ArgumentParser:
        sub = subparsers.add_parser(name, help=help_text)
        sub.add_argument("file", nargs="?", help="Curve file, or '-' for stdin")
        sub.add_argument("--curve", help="Inline curve '[..];[..];[..]'")
        sub.add_argument("--json", action="store_true", help="Emit JSON")
        sub.add_argument("--seed", type=non_negative_int, default=None, help="Seed for random map-degree samples")
        sub.add_argument("--trials", type=positive_int, default=None, help="Random samples per map-degree estimate")
        return sub

    curve_command("analyze", "Splitting type, mu-basis and scroll invariants")
    curve_command("implicitize", "Implicit equation and map degree")
    lift_parser = curve_command("lift", "Lift to a rational normal scroll")
    lift_parser.add_argument("--chart", choices=sorted(CHARTS), default=None, help="Force a lift chart")
    lift_parser.add_argument("--explicit", action="store_true", help="Add the explicit P^4 lift (k = 3)")
    curve_command("verify", "Run the invariant suite on one curve")

    battery = subparsers.add_parser("battery", help="Run the acceptance battery")
    battery.add_argument("--json", action="store_true", help="Emit JSON")
    battery.add_argument("--seed", type=non_negative_int, default=None, help="Seed for random fixtures")
    return parser


def read_curve_input(args: argparse.Namespace, stdin: TextIO) -> CurveInput:
    if args.curve:
        return parse_curve_text(args.curve)
    if not args.file:
        raise CurveParseError("A curve file or --curve is required")
    if args.file == "-":
        return parse_curve_text(stdin.read())
    path = Path(args.file)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise CurveParseError(f"Cannot read {path}: {exc}") from exc
    return parse_curve_text(text)


# ============================================
# Text rendering
# ============================================

def _line_text(line: List[List[str]]) -> str:
    return "(" + ", ".join(parse_form_list(c).to_text() for c in line) + ")"


def render_analysis(report: AnalysisReport) -> str:
    lines = [
        f"degree: {report.degree}",
        f"splitting type: ({report.splitting.a}, {report.splitting.b})" + (" balanced" if report.balanced else ""),
        f"p: {_line_text(report.mu_basis.p)}",
        f"q: {_line_text(report.mu_basis.q)}",
        f"Hilbert-Burch constant: {report.mu_basis.hilbert_burch_constant}",
        f"map degree: {report.map_degree}",
        f"second level: h={report.second_level.h} e={report.second_level.e} "
        f"{'Ascenzi' if report.second_level.ascenzi else 'not Ascenzi'}",
        f"gamma: {_line_text(report.second_level.gamma)}",
    ]
    admissible = [v.m for v in report.ascenzi_table if v.consistent]
    lines.append(f"multiplicities allowed by the bounds: {admissible}")
    if report.implicit:
        lines.append(f"implicit equation: {report.implicit.equation}  (r={report.implicit.map_degree})")
    if report.lift:
        lift = report.lift
        lines.append(f"lift: P^{lift.k + 1}, chart {lift.chart}, {lift.quadric_count} quadrics")
        for index, coeffs in enumerate(lift.coords):
            lines.append(f"  h{index} = {parse_form_list(coeffs).to_text()}")
        lines.append(f"  removed gcd: {parse_form_list(lift.removed_gcd).to_text()}")
        for quadric in lift.quadrics:
            lines.append(f"  quadric: {quadric}")
        diag = lift.diagnostics
        lines.append(
            f"  diagnostics: immersion={diag.immersion_pass} injectivity={diag.injectivity_degree} "
            f"vertex={diag.vertex} vertex degree={diag.vertex_preimage_degree} passed={diag.passed}"
        )
        if lift.explicit:
            lines.append(f"  explicit lift ({lift.explicit.branch} branch):")
            for quadric in lift.explicit.quadrics:
                lines.append(f"    quadric: {quadric}")
            lines.append(f"    centers: {lift.explicit.centers}")
    for remark in report.diagnostics:
        lines.append(f"note: {remark}")
    return "\n".join(lines)


def render_verification(report: VerificationReport) -> str:
    lines = [f"{'PASS' if c.passed else 'FAIL'}  {c.name}: {c.detail or ''}" for c in report.checks]
    lines.append(f"{'all checks passed' if report.passed else 'some checks failed'}")
    return "\n".join(lines)


def render_battery(report: BatteryReport) -> str:
    lines = [f"seed {report.seed}"]
    for c in report.criteria:
        lines.append(f"{c.number:>2}  {'PASS' if c.passed else 'FAIL'}  {c.name:<38} {c.seconds:7.2f}s  {c.detail}")
    lines.append("battery passed" if report.passed else "battery FAILED")
    return "\n".join(lines)


# ============================================
# Dispatch
# ============================================

def _execute(args: argparse.Namespace, stdin: TextIO) -> Tuple[str, int]:
    if args.command == "battery":
        report = AcceptanceBattery(seed=args.seed).run()
        text = report.model_dump_json(indent=2) if args.json else render_battery(report)
        return text, 0 if report.passed else 1

    curve_input = read_curve_input(args, stdin)
    analyzer = CurveAnalyzer(seed=args.seed, trials=args.trials)
    curve = analyzer.build_curve(curve_input)
    raw_forms = curve_input.forms or None

    if args.command == "verify":
        report = analyzer.verify(curve)
        text = report.model_dump_json(indent=2) if args.json else render_verification(report)
        return text, 0 if report.passed else 1

    report = analyzer.analyze(
        curve,
        raw_forms=raw_forms,
        include_implicit=args.command == "implicitize",
        include_lift=args.command == "lift",
        chart=CHARTS[args.chart] if getattr(args, "chart", None) else None,
        explicit=getattr(args, "explicit", False),
    )
    text = report.model_dump_json(indent=2) if args.json else render_analysis(report)
    return text, 0


def run_command(
    argv: Optional[List[str]] = None,
    stdout: Optional[TextIO] = None,
    stderr: Optional[TextIO] = None,
    stdin: Optional[TextIO] = None,
) -> int:
    """
    Run one command line invocation

    Args:
        argv: Arguments without the program name
        stdout, stderr, stdin: Streams, defaulting to the process streams

    Returns:
        Exit status
    """
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    stdin = stdin or sys.stdin
    parser = build_parser()
    try:
        with redirect_stderr(stderr):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    config = get_scroll_config()
    configure_logging(args.log_level or config.log_level, stderr)
    json_mode = getattr(args, "json", False)

    try:
        config.validate_config()
    except ValueError as exc:
        _report_error(stdout, stderr, json_mode, "ConfigError", str(exc))
        return 2

    try:
        text, status = _execute(args, stdin)
    except CurveParseError as exc:
        _report_error(stdout, stderr, json_mode, exc.code, str(exc))
        return 2
    except CurveAlgebraError as exc:
        logger.error(f"{exc.code}: {exc}")
        _report_error(stdout, stderr, json_mode, exc.code, str(exc))
        return 1
    print(text, file=stdout)
    return status


def _report_error(stdout: TextIO, stderr: TextIO, json_mode: bool, code: str, detail: str) -> None:
    print(f"{code}: {detail}", file=stderr)
    if json_mode:
        print(ErrorReport(error=code, detail=detail).model_dump_json(indent=2), file=stdout)


def main() -> None:
    sys.exit(run_command())


if __name__ == "__main__":
    main()
