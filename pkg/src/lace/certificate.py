"""Machine-readable verdicts with exact witnesses."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

POSITIVE_VERDICTS = frozenset({
    "real_rooted",
    "interlaces",
    "interlacing_sequence",
    "nonneg_sym_decomp",
    "nonneg_real_rooted_sym_decomp",
    "interlacing_sym_decomp",
    "strong_interlacing",
    "holds",
})


def _fmt(q) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


@dataclass
class Certificate:
    subject: str
    verdict: str
    witnesses: list[dict] = field(default_factory=list)
    hypothesis_report: list[tuple[str, bool]] = field(default_factory=list)
    parts: list["Certificate"] = field(default_factory=list)
    config: dict | None = None

    @property
    def positive(self) -> bool:
        return self.verdict in POSITIVE_VERDICTS

    def __bool__(self) -> bool:
        return self.positive

    def report(self, name: str, holds: bool) -> bool:
        self.hypothesis_report.append((name, bool(holds)))
        return bool(holds)

    def failed_conditions(self) -> list[str]:
        return [name for name, ok in self.hypothesis_report if not ok]

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "subject": self.subject,
            "verdict": self.verdict,
            "witnesses": [_witness_json(w) for w in self.witnesses],
            "hypothesis_report": [{"name": n, "holds": h} for n, h in self.hypothesis_report],
        }
        if self.parts:
            out["parts"] = [p.to_dict() for p in self.parts]
        if self.config is not None:
            out["config"] = self.config
        return out

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)


def _witness_json(w: dict) -> dict:
    out = {}
    for k, v in w.items():
        out[k] = _fmt(v) if isinstance(v, Fraction) else v
    return out
