"""Reading interval-polynomial problem files.

A problem file is a JSON object::

    {
      "name": "example",
      "degree": 2,
      "coefficients": [
        {"n": 0, "re": [1, 1]},
        {"n": 1, "re": [-1, 1], "im": [0, 0]},
        {"n": 2, "re": [1, 1]}
      ]
    }

``im`` defaults to ``[0, 0]``.  The family is real exactly when every
imaginary interval is ``[0, 0]``.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from pathlib import Path

from .exceptions import DegenerateLeading, ParseError, ValidationError
from .interval import ComplexIntervalBox, RealInterval
from .kharitonov import IntervalPolynomial

__all__ = ["Problem", "parse_problem", "load_problem", "problem_from_dict", "problem_to_dict"]


@dataclass(frozen=True)
class Problem:
    polynomial: IntervalPolynomial
    name: str = ""
    notes: str = ""
    source: str = ""
    extra: dict = field(default_factory=dict)


def _number(value, where):
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ValidationError(f"{where}: expected a number, got {value!r}")
    value = float(value)
    if not math.isfinite(value):
        raise ValidationError(f"{where}: value must be finite")
    return value


def _interval(value, where):
    if not isinstance(value, list) or len(value) != 2:
        raise ValidationError(f"{where}: expected [lo, hi]")
    lo, hi = _number(value[0], f"{where}[0]"), _number(value[1], f"{where}[1]")
    if lo > hi:
        raise ValidationError(f"{where}: lo > hi ({lo} > {hi})")
    return RealInterval(lo, hi)


def problem_from_dict(data, source: str = "<dict>") -> Problem:
    """Validate a decoded problem object and build the interval polynomial."""
    if not isinstance(data, dict):
        raise ValidationError(f"{source}: top level must be an object")
    if "degree" not in data:
        raise ValidationError(f"{source}: missing field 'degree'")
    degree = data["degree"]
    if isinstance(degree, bool) or not isinstance(degree, int) or degree < 1:
        raise ValidationError(f"{source}: 'degree' must be an integer >= 1, got {degree!r}")
    records = data.get("coefficients")
    if not isinstance(records, list):
        raise ValidationError(f"{source}: 'coefficients' must be an array")
    if len(records) != degree + 1:
        raise ValidationError(
            f"{source}: degree {degree} needs {degree + 1} coefficient records, got {len(records)}"
        )

    boxes = [None] * (degree + 1)
    for k, rec in enumerate(records):
        where = f"{source}: coefficients[{k}]"
        if not isinstance(rec, dict):
            raise ValidationError(f"{where}: expected an object")
        unknown = set(rec) - {"n", "re", "im"}
        if unknown:
            raise ValidationError(f"{where}: unknown field(s) {sorted(unknown)}")
        n = rec.get("n")
        if isinstance(n, bool) or not isinstance(n, int) or not 0 <= n <= degree:
            raise ValidationError(f"{where}.n: index must be an integer in 0..{degree}, got {n!r}")
        if boxes[n] is not None:
            raise ValidationError(f"{where}.n: index {n} appears more than once")
        if "re" not in rec:
            raise ValidationError(f"{where}: missing field 're'")
        re = _interval(rec["re"], f"{where}.re")
        im = _interval(rec["im"], f"{where}.im") if "im" in rec else RealInterval(0.0, 0.0)
        boxes[n] = ComplexIntervalBox(re, im)

    is_real = all(b.is_real for b in boxes)
    try:
        poly = IntervalPolynomial(tuple(boxes), is_real=is_real)
    except DegenerateLeading as exc:
        raise DegenerateLeading(
            f"{source}: coefficient {degree} (leading) box contains zero; "
            "a leading coefficient that can vanish lets the degree drop and a root escape "
            "to infinity, so 0 must not lie in [a_N + i b_N]"
        ) from exc

    name = data.get("name", "")
    notes = data.get("notes", "")
    extra = {k: v for k, v in data.items() if k not in {"degree", "coefficients", "name", "notes"}}
    return Problem(poly, str(name), str(notes), source, extra)


def parse_problem(path) -> IntervalPolynomial:
    """Read a problem file and return its validated interval polynomial."""
    return load_problem(path).polynomial


def load_problem(path) -> Problem:
    """Read a problem file, keeping its metadata.

    Raises
    ------
    ParseError
        If the file is missing or is not valid JSON (with line and column).
    ValidationError
        If the content violates the schema or the leading-coefficient rule.
    """
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"{path}: cannot read file ({exc.strerror})") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from exc
    return problem_from_dict(data, str(path))


def problem_to_dict(P: IntervalPolynomial, name: str = "") -> dict:
    coeffs = []
    for n, b in enumerate(P.coeffs):
        rec = {"n": n, "re": [b.re.lo, b.re.hi]}
        if not P.is_real:
            rec["im"] = [b.im.lo, b.im.hi]
        coeffs.append(rec)
    out = {"degree": P.degree, "coefficients": coeffs}
    if name:
        out = {"name": name, **out}
    return out
