"""Check reports: both sides of a relation plus the verdict derived from them."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Sequence

RELATIONS = ("<=", "=", ">=")


def _cmp(a, b, relation: str) -> bool:
    if relation == "<=":
        return a <= b
    if relation == ">=":
        return a >= b
    if relation == "=":
        return a == b
    raise ValueError(f"unknown relation {relation!r}")


def relation_holds(lhs, rhs, relation: str) -> bool:
    """Scalars compare directly; equal-length sequences compare entry by entry."""
    if isinstance(lhs, (list, tuple)) or isinstance(rhs, (list, tuple)):
        if not isinstance(lhs, (list, tuple)) or not isinstance(rhs, (list, tuple)) or len(lhs) != len(rhs):
            raise ValueError("vector sides must have equal length")
        return all(_cmp(a, b, relation) for a, b in zip(lhs, rhs))
    return _cmp(lhs, rhs, relation)


@dataclass
class CheckReport:
    check: str
    input: str
    field: str
    relation: str = "="
    lhs: Any = None
    rhs: Any = None
    seed: int | None = None
    skipped_reason: str | None = None
    witnesses: list = field(default_factory=list)
    notes: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.relation not in RELATIONS:
            raise ValueError(f"unknown relation {self.relation!r}")

    @property
    def skipped(self) -> bool:
        return self.skipped_reason is not None

    @property
    def holds(self) -> bool | None:
        if self.skipped:
            return None
        return relation_holds(self.lhs, self.rhs, self.relation)

    @property
    def status(self) -> str:
        h = self.holds
        return "skip" if h is None else ("pass" if h else "fail")

    @property
    def is_equality(self) -> bool | None:
        """Whether the two sides coincide (meaningful for inequalities)."""
        if self.skipped:
            return None
        return relation_holds(self.lhs, self.rhs, "=")

    def to_dict(self) -> dict:
        return {
            "check": self.check,
            "input": self.input,
            "seed": self.seed,
            "field": self.field,
            "lhs": encode(self.lhs),
            "rhs": encode(self.rhs),
            "relation": self.relation,
            "holds": self.holds,
            "skipped_reason": self.skipped_reason,
            "witnesses": encode(self.witnesses),
        }

    def summary_line(self) -> str:
        if self.skipped:
            return f"{self.check:<24} {self.input:<40} SKIP  {self.skipped_reason}"
        return f"{self.check:<24} {self.input:<40} {self.status.upper():<5} {fmt(self.lhs)} {self.relation} {fmt(self.rhs)}"


def skipped(check: str, input: str, field: str, reason: str, seed=None) -> CheckReport:
    return CheckReport(check, input, field, "=", None, None, seed, reason)


def encode(value):
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, Fraction):
        return {"num": str(value.numerator), "den": str(value.denominator)}
    if isinstance(value, int):
        return value
    if isinstance(value, (list, tuple)):
        return [encode(v) for v in value]
    if isinstance(value, dict):
        return {str(k): encode(v) for k, v in value.items()}
    return str(value)


def fmt(value) -> str:
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, (list, tuple)):
        return "(" + ", ".join(fmt(v) for v in value) + ")"
    return str(value)


def dumps(reports: Sequence[CheckReport]) -> str:
    return json.dumps([r.to_dict() for r in reports], indent=2, sort_keys=False) + "\n"
