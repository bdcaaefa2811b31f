#!/usr/bin/env python3
"""
Sequentially generalized Cohen-Macaulay toolkit
Main entry point for the sgcm command line

Run:
    sgcm seq-gcm session.sgcm --module M
    sgcm ifm session.sgcm --filtration F --sop x --grid 3
    sgcm verify-paper-example 4.7
    sgcm corpus --count 20 --out-dir corpus/
"""

import argparse
import sys
from pathlib import Path
from typing import List, Optional

from cli.commands import run_command
from cli.config import COMMANDS, EXIT_CODES, STATUS_EMOJI, get_config
from cli.report import AnalysisReport, error_report
from cli.session import parse_session
from exactalg.errors import SgcmError


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sgcm",
        description="Sequentially generalized Cohen-Macaulay modules over polynomial rings",
        epilog="\n".join(f"  {name:<22}{text}" for name, text in COMMANDS.items()),
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("command", choices=list(COMMANDS), metavar="command")
    parser.add_argument("session", nargs="?", help="session file (.sgcm), or the example id for verify-paper-example")
    parser.add_argument("--module", help="module name (default: first declared)")
    parser.add_argument("--filtration", help="filtration name (default: dimension filtration)")
    parser.add_argument("--sop", help="system of parameters name")
    parser.add_argument("--grid", type=int, help="grid size for I_{F,M} tables")
    parser.add_argument("--bound", type=int, help="exponent bound for the dd-check")
    parser.add_argument("--seed", type=int, help="random seed for searches")
    parser.add_argument("--budget", type=int, help="number of seeds the witness search may use")
    parser.add_argument("--threads", type=int, help="worker threads for length grids")
    parser.add_argument("--example", help="worked example for verify-paper-example (4.7, 5.5, 5.6)")
    parser.add_argument("--count", type=int, help="number of corpus instances")
    parser.add_argument("--out-dir", dest="out_dir", help="directory for corpus session files")
    parser.add_argument("--out", help="write the JSON report to this file")
    parser.add_argument("--quiet", action="store_true", help="print only the JSON report")
    return parser


def print_summary(report: AnalysisReport) -> None:
    """Print status line and text tables"""
    print("\n" + "=" * 70)
    print(f"{STATUS_EMOJI.get(report.status, '')} {report.command}: {report.status.upper()}")
    print("=" * 70)
    if report.message:
        print(f"📝 {report.message}")
    for label, text in report.text_tables.items():
        print(f"\n📊 {label}")
        print(text)
    for check in report.verifications:
        passed = check.get("passed")
        if passed is not None:
            mark = "✅" if passed else "❌"
            print(f"   {mark} {check.get('check', check.get('identity', ''))}")
    if report.timing is not None:
        print(f"\n⏱️  {report.timing}s")
    print()


def execute(argv: Optional[List[str]] = None) -> AnalysisReport:
    args = build_parser().parse_args(argv)
    options = {
        key: getattr(args, key)
        for key in ("module", "filtration", "sop", "grid", "bound", "seed", "budget", "threads", "example", "count", "out_dir")
    }
    session = None
    if args.command == "verify-paper-example":
        # the positional slot carries the example id
        options["example"] = args.example or args.session or "4.7"
    elif args.session is not None:
        try:
            session = parse_session(args.session)
        except (OSError, SgcmError) as e:
            return error_report(args.command, f"{type(e).__name__}: {str(e)}", args.session)
    return run_command(session, args.command, options, get_config())


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point"""
    args = build_parser().parse_args(argv)
    try:
        report = execute(argv)
    except KeyboardInterrupt:
        print("\n\n👋 Interrupted.")
        return EXIT_CODES["error"]

    if not args.quiet:
        print_summary(report)
    if args.out:
        Path(args.out).write_text(report.to_json() + "\n", encoding="utf-8")
        if not args.quiet:
            print(f"💾 Report written to {args.out}")
    else:
        print(report.to_json())
    return EXIT_CODES.get(report.status, EXIT_CODES["error"])


if __name__ == "__main__":
    sys.exit(main())
