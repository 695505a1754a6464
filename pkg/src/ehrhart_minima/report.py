"""Verification reports and deterministic JSON output."""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

RELATIONS = ("<=", "=", ">")


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one named check on one polytope.

    ``passed`` and ``tight`` are always derived from ``lhs``, ``rhs`` and
    ``relation`` (see :func:`compare`); aggregate checks compare the number
    of passing sub-checks against the number attempted.
    """

    check_name: str
    polytope_name: str
    lhs: Any
    rhs: Any
    relation: str
    passed: bool
    tight: bool
    conjecture: bool = False
    tolerance: float | None = None
    details: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "check": self.check_name,
            "polytope": self.polytope_name,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "relation": self.relation,
            "passed": self.passed,
            "tight": self.tight,
            "conjecture": self.conjecture,
            "tolerance": self.tolerance,
            "details": self.details,
        }


def relation_holds(lhs, rhs, relation: str, tolerance: float | None = None) -> tuple[bool, bool]:
    """Return ``(passed, tight)`` for ``lhs <relation> rhs``."""
    if relation not in RELATIONS:
        raise ValueError(f"unknown relation {relation!r}")
    tol = tolerance or 0
    equal = abs(lhs - rhs) <= tol
    if relation == "=":
        return equal, equal
    if relation == "<=":
        ok = lhs <= rhs or equal
        return ok, equal
    return lhs > rhs - tol, False


def compare(check_name: str, polytope_name: str, lhs, rhs, relation: str, *, tolerance=None,
            conjecture: bool = False, details: dict | None = None) -> VerificationReport:
    passed, tight = relation_holds(lhs, rhs, relation, tolerance)
    return VerificationReport(check_name, polytope_name, lhs, rhs, relation, passed, tight,
                              conjecture, tolerance, details or {})


def aggregate(check_name: str, polytope_name: str, subchecks: dict[str, bool], *,
              conjecture: bool = False, tolerance=None, details: dict | None = None) -> VerificationReport:
    ok = sum(bool(v) for v in subchecks.values())
    merged = {"subchecks": dict(subchecks)}
    merged.update(details or {})
    return compare(check_name, polytope_name, ok, len(subchecks), "=", conjecture=conjecture,
                   tolerance=tolerance, details=merged)


def sort_reports(reports):
    return sorted(reports, key=lambda r: (r.check_name, r.polytope_name))


# ---------------------------------------------------------------------------
# JSON


def _scalar(x) -> str:
    if x is None:
        return "null"
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, int):
        return str(x)
    if isinstance(x, float):
        if not math.isfinite(x):
            return "null"
        return format(x, ".17g")
    if isinstance(x, str):
        return json.dumps(x, ensure_ascii=False)
    raise TypeError(f"cannot serialise {type(x).__name__}")


def jsonable(x):
    """Convert fractions, tuples, reports and numpy scalars into plain JSON data."""
    if isinstance(x, VerificationReport):
        return jsonable(x.to_json())
    if hasattr(x, "to_json") and not isinstance(x, type):
        return jsonable(x.to_json())
    if isinstance(x, Fraction):
        return [x.numerator, x.denominator]
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    if hasattr(x, "item") and callable(x.item):
        return jsonable(x.item())
    if isinstance(x, complex):
        return [x.real, x.imag]
    return x


def dumps(obj, indent: int = 2) -> str:
    """Deterministic JSON: sorted keys, floats at 17 significant digits."""
    data = jsonable(obj)

    def emit(x, level: int) -> str:
        pad = " " * (indent * (level + 1))
        end = " " * (indent * level)
        if isinstance(x, dict):
            if not x:
                return "{}"
            items = [f"{pad}{_scalar(k)}: {emit(x[k], level + 1)}" for k in sorted(x)]
            return "{\n" + ",\n".join(items) + "\n" + end + "}"
        if isinstance(x, list):
            if not x:
                return "[]"
            if all(not isinstance(v, (dict, list)) for v in x):
                return "[" + ", ".join(_scalar(v) for v in x) + "]"
            return "[\n" + ",\n".join(pad + emit(v, level + 1) for v in x) + "\n" + end + "]"
        return _scalar(x)

    return emit(data, 0)
