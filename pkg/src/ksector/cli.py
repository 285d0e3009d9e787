"""Command-line interface.

Subcommands: ``certify``, ``sector``, ``bisect``, ``vertices``, ``sample`` and
``conjecture``.  Each reads one problem file and writes a text report, or a
JSON report with ``--format machine``.

Exit codes: 0 success, 1 certificate false, 2 invalid input, 3 root solver
failure, 4 vertex cap exceeded.
"""

from __future__ import annotations

import argparse
import math
import sys
import time

from . import __version__
from .exceptions import KSectorError, NonConvergence, NotHurwitz
from .kharitonov import DEFAULT_MAX_VERTICES, certify, vertex_count
from .oracle import conjecture_experiment, sample_sector, vertex_sector
from .polyroot import PointPolynomial
from .problem import load_problem
from .report import (
    angle_dict,
    brackets_dict,
    certificate_dict,
    conjecture_dict,
    dumps,
    input_dict,
    poly_dict,
    render_text,
    sector_dict,
    sector_report_dict,
)
from .sector import DEFAULT_TOL, bisect, kharitonov_brackets, sector_from_brackets

EXIT_OK = 0
EXIT_CERTIFICATE_FALSE = 1
DEFAULT_SAMPLES = 10**6
DEFAULT_SEED = 0


def parse_angle(text: str) -> float:
    """Parse an angle in radians; a trailing ``pi`` multiplies by pi (``1e-4pi``)."""
    s = text.strip().lower().replace("π", "pi")
    try:
        if s.endswith("pi"):
            head = s[:-2].rstrip("*").strip()
            value = (float(head) if head else 1.0) * math.pi
        else:
            value = float(s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an angle: {text!r} (use radians or e.g. 1e-4pi)")
    if not (math.isfinite(value) and value > 0):
        raise argparse.ArgumentTypeError(f"angle must be positive and finite, got {text!r}")
    return value


def _positive_int(text):
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("problem", help="problem file (JSON)")
    common.add_argument("--format", choices=("text", "machine"), default="text")
    common.add_argument("--tol", type=parse_angle, default=DEFAULT_TOL,
                        help="bisection tolerance in radians, or with a pi suffix (default 1e-4pi)")
    common.add_argument("--side", choices=("left", "right", "both"), default="both")
    common.add_argument("--samples", type=_positive_int, default=DEFAULT_SAMPLES)
    common.add_argument("--seed", type=int, default=DEFAULT_SEED)
    common.add_argument("--max-vertices", type=_positive_int, default=DEFAULT_MAX_VERTICES)
    common.add_argument("--scan-check", action="store_true",
                        help="grid-scan the sector test to detect non-monotone behaviour")
    common.add_argument("--jobs", type=_positive_int, default=1,
                        help="worker threads for sampling (results do not depend on it)")
    common.add_argument("--timings", action="store_true",
                        help="include wall-clock timings in machine reports")

    parser = argparse.ArgumentParser(
        prog="ksector",
        description="Kharitonov certificates and root sectors of interval polynomials.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    helps = {
        "certify": "Hurwitz certificate from the Kharitonov vertex polynomials",
        "sector": "Kharitonov containing sector (both bisections)",
        "bisect": "bracket the certified sector margin on one or both sides",
        "vertices": "sector spanned by all vertex polynomials",
        "sample": "sector spanned by uniformly sampled members",
        "conjecture": "compare Kharitonov, vertex and sampled sectors",
    }
    for name, text in helps.items():
        sub.add_parser(name, parents=[common], help=text, description=text)
    return parser


class _Clock:
    def __init__(self):
        self.timings = {}

    def __call__(self, label, fn, *args, **kwargs):
        t0 = time.perf_counter()
        try:
            return fn(*args, **kwargs)
        finally:
            self.timings[label] = time.perf_counter() - t0


def _settings(args, command):
    out = {}
    if command in ("sector", "bisect", "conjecture"):
        out["tol"] = angle_dict(args.tol)
        out["scan_check"] = args.scan_check
    if command == "bisect":
        out["side"] = args.side
    if command in ("vertices", "conjecture"):
        out["max_vertices"] = args.max_vertices
    if command in ("sample", "conjecture"):
        out["samples"] = args.samples
        out["seed"] = args.seed
    return out


def _execute(args, report, clock) -> int:
    P = report.pop("_poly")
    cmd = args.command

    if cmd == "certify":
        cert = clock("certify", certify, P)
        report["certificate"] = certificate_dict(cert)
        return EXIT_OK if cert.hurwitz else EXIT_CERTIFICATE_FALSE

    if cmd == "sector":
        cert = clock("certify", certify, P)
        report["certificate"] = certificate_dict(cert)
        if not cert.hurwitz:
            return EXIT_CERTIFICATE_FALSE
        brackets = clock("bisect", kharitonov_brackets, P, args.tol, args.scan_check)
        report["brackets"] = brackets_dict(brackets)
        report["symmetric"] = P.is_real
        report["sector"] = sector_dict(sector_from_brackets(brackets))
        return EXIT_OK

    if cmd == "bisect":
        sides = ["left", "right"] if args.side == "both" else [args.side]
        if P.is_real and args.side == "both":
            sides = ["left"]
        out = {}
        for side in sides:
            out[side] = clock(f"bisect_{side}", bisect, P, side, args.tol, args.scan_check)
        report["brackets"] = brackets_dict(out)
        report["symmetric"] = P.is_real
        return EXIT_OK

    if cmd == "vertices":
        report["vertex_count"] = vertex_count(P)
        vr = clock("vertices", vertex_sector, P, args.max_vertices)
        report["vertex"] = sector_report_dict(vr)
        return EXIT_OK

    if cmd == "sample":
        sr = clock("sample", sample_sector, P, args.samples, args.seed, args.jobs)
        report["sampled"] = sector_report_dict(sr)
        return EXIT_OK

    if cmd == "conjecture":
        cert = clock("certify", certify, P)
        report["certificate"] = certificate_dict(cert)
        if not cert.hurwitz:
            return EXIT_CERTIFICATE_FALSE
        cr = clock(
            "conjecture",
            conjecture_experiment,
            P,
            args.samples,
            args.seed,
            args.tol,
            args.jobs,
            args.max_vertices,
        )
        report.update(conjecture_dict(cr))
        return EXIT_OK

    raise AssertionError(cmd)


def run(argv=None, stdout=None, stderr=None) -> int:
    """Parse ``argv``, run the subcommand, write the report and return the exit code."""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    args = parser.parse_args(argv)

    report = {"command": args.command, "source": args.problem}
    clock = _Clock()
    try:
        problem = load_problem(args.problem)
        report["input"] = input_dict(problem.polynomial, problem.name)
        report["settings"] = _settings(args, args.command)
        report["_poly"] = problem.polynomial
        code = _execute(args, report, clock)
    except KSectorError as exc:
        report.pop("_poly", None)
        report["error"] = str(exc)
        report["error_type"] = type(exc).__name__
        coeffs = getattr(exc, "coeffs", None)
        if coeffs is not None and isinstance(exc, (NonConvergence, NotHurwitz)):
            report["offending_polynomial"] = poly_dict(PointPolynomial(coeffs))
        code = exc.exit_code
    report["exit_code"] = code

    if args.format == "text" or args.timings:
        report["timings"] = clock.timings
    if args.format == "machine":
        stdout.write(dumps(report))
    else:
        text = render_text(report)
        if "offending_polynomial" in report:
            text += f"offending polynomial: {report['offending_polynomial']['text']}\n"
        (stderr if "error" in report else stdout).write(text)
    return code


def main():  # pragma: no cover - console entry point
    sys.exit(run())


if __name__ == "__main__":  # pragma: no cover
    main()
