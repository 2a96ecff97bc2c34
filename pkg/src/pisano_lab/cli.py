"""Command-line surface: pisano-lab <period|classify|sweep|verify|diagram>.

Exit codes: 0 success, 1 verification failure, 2 invalid arguments,
3 I/O failure. Every command prints plain text by default and the same
content as JSON with --format json; --out writes the JSON report to a
file (for diagram, --out is the SVG target instead).
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from pathlib import Path

from . import _checks
from .complete import ShiftCertificate, compute_shift
from .core import pisano_period
from .quasi import predict_quasi, verify_quasi
from .render import build_scene, render_frames, render_svg
from .subseq import CIRCLE_POINTS, SubsequenceSpec, star_polygon, subsequence_period

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_BAD_ARGUMENTS = 2
EXIT_IO_FAILURE = 3


def _bool_text(value: bool) -> str:
    return "true" if value else "false"


def _emit(report: dict, text_lines: list[str], args: argparse.Namespace, *, report_out: bool = True) -> None:
    if args.format == "json":
        print(json.dumps(report, indent=2))
    else:
        print("\n".join(text_lines))
    # for diagram, --out names the SVG target, not a report file
    if report_out and args.out:
        Path(args.out).write_text(json.dumps(report, indent=2) + "\n", encoding="utf-8")


def cmd_period(args: argparse.Namespace) -> int:
    if args.m is not None and args.m_option is not None:
        print("error: give the modulus once, either positionally or via --m", file=sys.stderr)
        return EXIT_BAD_ARGUMENTS
    m = args.m if args.m is not None else args.m_option
    if m is None:
        print("error: a modulus is required", file=sys.stderr)
        return EXIT_BAD_ARGUMENTS
    result = pisano_period(m)
    report = {
        "command": "period",
        "inputs": {"m": m},
        "results": {"length": result.length, "period": list(result.period)},
    }
    text = [
        f"modulus: {m}",
        f"length: {result.length}",
        "period: " + " ".join(str(v) for v in result.period),
    ]
    _emit(report, text, args)
    return EXIT_OK


def _certificate_dict(cert: ShiftCertificate) -> dict:
    return {
        "unit_digit": cert.unit_digit,
        "log_index": cert.log_index,
        "zero_vertex": cert.zero_vertex,
        "restart_index": cert.restart_index,
        "first_zero": cert.first_zero,
        "direction": cert.direction.value,
        "shift": cert.shift,
    }


def cmd_classify(args: argparse.Namespace) -> int:
    spec = SubsequenceSpec(k=args.k, r=args.r)
    poly = star_polygon(spec)
    period = subsequence_period(spec)
    observed = verify_quasi(period)
    predicted = predict_quasi(spec.r)
    cert = compute_shift(spec.k, spec.r) if math.gcd(spec.r, CIRCLE_POINTS) == 1 else None
    report = {
        "command": "classify",
        "inputs": {"k": spec.k, "r": spec.r},
        "results": {
            "n": poly.n,
            "q": poly.q,
            "type": poly.diagram_type.value,
            "convex": poly.convex,
            "terms": list(period.terms),
            "quasi": observed.value,
            "prediction": predicted.value,
            "certificate": _certificate_dict(cert) if cert else None,
        },
    }
    text = [
        f"k: {spec.k}",
        f"r: {spec.r}",
        f"n: {poly.n}",
        f"q: {poly.q}",
        f"type: {poly.diagram_type.value}",
        f"convex: {_bool_text(poly.convex)}",
        "terms: " + " ".join(str(v) for v in period.terms),
        f"quasi: {observed.value}",
        f"prediction: {predicted.value}",
    ]
    if cert:
        text.append("certificate:")
        for key, value in _certificate_dict(cert).items():
            text.append(f"  {key}: {value}")
    else:
        text.append("certificate: none")
    _emit(report, text, args)
    return EXIT_OK


def cmd_sweep(args: argparse.Namespace) -> int:
    rows = []
    text = []
    for k in range(CIRCLE_POINTS):
        for r in range(1, CIRCLE_POINTS):
            spec = SubsequenceSpec(k=k, r=r)
            poly = star_polygon(spec)
            observed = verify_quasi(subsequence_period(spec))
            predicted = predict_quasi(r)
            if math.gcd(r, CIRCLE_POINTS) == 1:
                cert = compute_shift(k, r)
                direction, shift = cert.direction.value, cert.shift
                shift_text = f"{direction}:{shift}"
            else:
                direction, shift, shift_text = None, None, "-"
            rows.append(
                {
                    "k": k,
                    "r": r,
                    "n": poly.n,
                    "q": poly.q,
                    "type": poly.diagram_type.value,
                    "quasi": observed.value,
                    "prediction": predicted.value,
                    "direction": direction,
                    "shift": shift,
                }
            )
            text.append(
                f"k={k} r={r} n={poly.n} q={poly.q} type={poly.diagram_type.value} "
                f"quasi={observed.value} prediction={predicted.value} shift={shift_text}"
            )
    report = {
        "command": "sweep",
        "inputs": {},
        "results": {"row_count": len(rows), "rows": rows},
    }
    _emit(report, text, args)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    results = _checks.run_all()
    verified = all(result.passed for result in results)
    report = {
        "command": "verify",
        "inputs": {},
        "results": {
            "checks": [
                {"name": r.name, "passed": r.passed, "detail": r.detail} for r in results
            ],
        },
        "verified": verified,
    }
    text = []
    for result in results:
        if result.passed:
            text.append(f"PASS {result.name} ({result.detail})")
        else:
            text.append(f"FAIL {result.name}: {result.detail}")
    text.append(f"verified: {_bool_text(verified)}")
    _emit(report, text, args)
    return EXIT_OK if verified else EXIT_VERIFICATION_FAILED


def cmd_diagram(args: argparse.Namespace) -> int:
    if args.frames and args.steps is not None:
        print("error: --frames and --steps cannot be combined", file=sys.stderr)
        return EXIT_BAD_ARGUMENTS
    spec = SubsequenceSpec(k=args.k, r=args.r)
    out = Path(args.out)
    results: dict
    if args.frames:
        frames = render_frames(spec)
        base = out.with_suffix("") if out.suffix == ".svg" else out
        files = []
        for index, document in enumerate(frames):
            path = Path(f"{base}-{index:02d}.svg")
            path.write_bytes(document)
            files.append(str(path))
        results = {"files": files, "frame_count": len(files)}
    else:
        scene = build_scene(spec, step_limit=args.steps)
        out.write_bytes(render_svg(scene))
        files = [str(out)]
        results = {"files": files, "edge_count": len(scene.edges)}
    report = {
        "command": "diagram",
        "inputs": {"k": spec.k, "r": spec.r, "steps": args.steps, "frames": args.frames},
        "results": results,
    }
    text = [f"wrote {path}" for path in files]
    _emit(report, text, args, report_out=False)
    return EXIT_OK


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=("text", "json"), default="text")
    parser.add_argument("--out", metavar="PATH", default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pisano-lab",
        description="Fibonacci sequences modulo m: periods, subsequence diagrams, SVG output.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    period = sub.add_parser("period", help="Pisano period of the Fibonacci sequence mod m")
    period.add_argument("m", nargs="?", type=int, default=None, help="modulus, at least 2")
    period.add_argument("--m", dest="m_option", type=int, default=None, help="modulus, at least 2")
    _add_common(period)
    period.set_defaults(handler=cmd_period)

    classify = sub.add_parser("classify", help="classify the (k, r) subsequence diagram")
    classify.add_argument("--k", type=int, required=True, help="start index in [0, 59]")
    classify.add_argument("--r", type=int, required=True, help="jump size in [1, 59]")
    _add_common(classify)
    classify.set_defaults(handler=cmd_classify)

    sweep = sub.add_parser("sweep", help="classify all 60 x 59 subsequences")
    _add_common(sweep)
    sweep.set_defaults(handler=cmd_sweep)

    verify = sub.add_parser("verify", help="run every verification sweep")
    _add_common(verify)
    verify.set_defaults(handler=cmd_verify)

    diagram = sub.add_parser("diagram", help="write SVG diagrams")
    diagram.add_argument("--k", type=int, required=True, help="start index in [0, 59]")
    diagram.add_argument("--r", type=int, required=True, help="jump size in [1, 59]")
    diagram.add_argument("--steps", type=int, default=None, help="render only the first edges")
    diagram.add_argument("--frames", action="store_true", help="write one SVG per construction step")
    _add_common(diagram)
    diagram.set_defaults(handler=cmd_diagram)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse already printed usage
        return int(exc.code or 0)
    if args.command == "diagram" and args.out is None:
        print("error: diagram requires --out PATH", file=sys.stderr)
        return EXIT_BAD_ARGUMENTS
    try:
        return args.handler(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_ARGUMENTS
    except BrokenPipeError:
        # downstream closed the pipe (e.g. | head); suppress the shutdown noise
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        return EXIT_IO_FAILURE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO_FAILURE


if __name__ == "__main__":
    sys.exit(main())
