"""Plain-data and text renderings of results.

Every angle is emitted as radians together with its pi-fraction, degrees and
a rendered string.  Degrees are always ``pi_fraction * 180``.
"""

from __future__ import annotations

import json

from .angles import Sector, to_degrees, to_pi_fraction
from .kharitonov import Certificate, IntervalPolynomial
from .oracle import ConjectureReport, SectorReport
from .polyroot import PointPolynomial
from .problem import problem_to_dict
from .sector import Bracket

__all__ = [
    "angle_dict",
    "poly_dict",
    "certificate_dict",
    "bracket_dict",
    "brackets_dict",
    "sector_dict",
    "sector_report_dict",
    "conjecture_dict",
    "input_dict",
    "dumps",
    "render_text",
]


def angle_dict(radians: float) -> dict:
    frac = to_pi_fraction(radians)
    deg = to_degrees(radians)
    return {
        "radians": radians,
        "pi_fraction": frac,
        "degrees": deg,
        "text": f"{frac:.6f}π = {deg:.4f}°",
    }


def poly_dict(p: PointPolynomial) -> dict:
    return {"coeffs": [[c.real, c.imag] for c in p.coeffs], "text": str(p)}


def certificate_dict(c: Certificate) -> dict:
    return {
        "hurwitz": c.hurwitz,
        "kind": c.kind,
        "evaluated": len(c.margins),
        "total": c.n_vertices,
        "failing_index": c.failing_index,
        "margins": list(c.margins),
        "vertices": [poly_dict(v) for v in c.vertices],
    }


def bracket_dict(b: Bracket) -> dict:
    return {
        "side": b.side,
        "lo": angle_dict(b.lo),
        "hi": angle_dict(b.hi),
        "width": angle_dict(b.width),
        "iterations": b.iterations,
        "certified_at_lo": b.certified_at_lo,
        "scan_anomalies": list(b.anomalies),
    }


def brackets_dict(brackets: dict) -> dict:
    # real families reuse the left bracket for the right side
    if brackets.get("right") is brackets.get("left"):
        return {"left": bracket_dict(brackets["left"])}
    return {side: bracket_dict(b) for side, b in brackets.items()}


def sector_dict(s: Sector) -> dict:
    lo_deg, hi_deg = s.degrees
    return {
        "alpha": angle_dict(s.alpha),
        "beta": angle_dict(s.beta),
        "lower": angle_dict(s.lower),
        "upper": angle_dict(s.upper),
        "text": f"[{lo_deg:.4f}°, {hi_deg:.4f}°]",
    }


def sector_report_dict(r: SectorReport) -> dict:
    out = {
        "sector": sector_dict(r.sector),
        "count": r.count,
        "attaining_left": poly_dict(r.attaining_left),
        "attaining_left_index": r.left_index,
        "attaining_right": poly_dict(r.attaining_right),
        "attaining_right_index": r.right_index,
    }
    if r.seed is not None:
        out["seed"] = r.seed
        out["unstable"] = r.unstable
        out["first_unstable"] = None if r.first_unstable is None else poly_dict(r.first_unstable)
    return out


def conjecture_dict(r: ConjectureReport) -> dict:
    return {
        "brackets": brackets_dict(r.brackets),
        "sector": sector_dict(r.kharitonov),
        "vertex": sector_report_dict(r.vertex),
        "sampled": sector_report_dict(r.sampled),
        "chain": dict(r.chain),
        "chain_holds": r.chain_holds,
        "counterexamples": r.counterexamples,
        "counterexample_samples": [
            {"index": i, "polynomial": poly_dict(p)} for i, p in r.examples
        ],
    }


def input_dict(P: IntervalPolynomial, name: str = "") -> dict:
    d = problem_to_dict(P, name)
    d["is_real"] = P.is_real
    return d


def dumps(obj) -> str:
    """Machine report text; floats use shortest round-trip repr."""
    return json.dumps(obj, indent=2, ensure_ascii=False, allow_nan=False) + "\n"


def _fmt_angle(d):
    return d["text"]


def _fmt_bracket(b):
    return (
        f"{b['side']:>5} bracket: [{b['lo']['pi_fraction']:.6f}, {b['hi']['pi_fraction']:.6f}]π"
        f" = [{b['lo']['degrees']:.4f}°, {b['hi']['degrees']:.4f}°]"
        f"  ({b['iterations']} halvings)"
        + (f"  scan anomalies: {len(b['scan_anomalies'])}" if b["scan_anomalies"] else "")
    )


def _fmt_sector_report(label, r):
    lines = [
        f"{label}: {r['sector']['text']}  (alpha {_fmt_angle(r['sector']['alpha'])}, "
        f"beta {_fmt_angle(r['sector']['beta'])})",
        f"  examined: {r['count']}",
        f"  left edge attained by #{r['attaining_left_index']}: {r['attaining_left']['text']}",
        f"  right edge attained by #{r['attaining_right_index']}: {r['attaining_right']['text']}",
    ]
    if "seed" in r:
        lines.append(f"  seed: {r['seed']}  non-Hurwitz samples: {r['unstable']}")
        if r["first_unstable"]:
            lines.append(f"  first non-Hurwitz sample: {r['first_unstable']['text']}")
    return lines


def render_text(report: dict) -> str:
    """Human-readable rendering of a report dictionary produced by the CLI."""
    lines = []
    inp = report.get("input")
    if inp:
        title = inp.get("name") or report.get("source", "")
        kind = "real" if inp["is_real"] else "complex"
        lines.append(f"{title}: degree {inp['degree']} {kind} interval polynomial")
    cert = report.get("certificate")
    if cert:
        status = "true" if cert["hurwitz"] else "false"
        if cert["hurwitz"]:
            lines.append(f"Hurwitz: {status} ({cert['total']}/{cert['total']} vertices)")
        else:
            k = cert["failing_index"]
            lines.append(
                f"Hurwitz: {status} (vertex K{k + 1} fails, margin {cert['margins'][k]:+.6g})"
            )
            lines.append(f"  failing vertex: {cert['vertices'][k]['text']}")
        for i, (v, m) in enumerate(zip(cert["vertices"], cert["margins"])):
            lines.append(f"  K{i + 1}: {v['text']}   max Re = {m:+.6g}")
        for i in range(len(cert["margins"]), cert["total"]):
            lines.append(f"  K{i + 1}: {cert['vertices'][i]['text']}   (not evaluated)")
    for b in report.get("brackets", {}).values():
        lines.append(_fmt_bracket(b))
    if "sector" in report:
        s = report["sector"]
        lines.append(
            f"Kharitonov sector: {s['text']}  (alpha {_fmt_angle(s['alpha'])}, "
            f"beta {_fmt_angle(s['beta'])})"
        )
    if "vertex" in report:
        lines.extend(_fmt_sector_report("vertex sector", report["vertex"]))
    if "sampled" in report:
        lines.extend(_fmt_sector_report("sampled sector", report["sampled"]))
    if "chain" in report:
        lines.append("containment chain K ⊇ V ⊇ S:")
        for k, v in report["chain"].items():
            lines.append(f"  {k}: {'ok' if v else 'VIOLATED'}")
        lines.append(f"  members escaping the vertex sector: {report['counterexamples']}")
        for ce in report["counterexample_samples"]:
            lines.append(f"    #{ce['index']}: {ce['polynomial']['text']}")
    if "error" in report:
        lines.append(f"error: {report['error']}")
    if "timings" in report:
        lines.append(
            "timings: " + ", ".join(f"{k} {v:.3f}s" for k, v in report["timings"].items())
        )
    return "\n".join(lines) + "\n"

