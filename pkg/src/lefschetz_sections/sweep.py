"""Tabulated verdicts over a grid of (t, a, characteristic) cells."""
from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass

from .errors import InvalidParameter, LefschetzError, NonArtinianSection
from .exactfield import FieldCtx, scalar_from_string
from .families import ideal_I, ideal_J
from .lefschetz import linear_form, slp_full, wlp_via_det

REASONS = {
    NonArtinianSection: "non-Artinian section",
}


@dataclass(frozen=True)
class SweepSpec:
    t_min: int
    t_max: int
    a_values: tuple[str, ...] = ("0",)
    characteristics: tuple[int, ...] = (0,)
    property: str = "WLP"
    output_format: str = "table"

    def __post_init__(self):
        if self.t_min < 1 or self.t_max < self.t_min:
            raise InvalidParameter(f"empty or invalid t range {self.t_min}..{self.t_max}")
        if self.property not in ("WLP", "SLP"):
            raise InvalidParameter(f"property must be WLP or SLP, got {self.property!r}")
        if self.output_format not in ("table", "structured"):
            raise InvalidParameter(f"unknown output format {self.output_format!r}")
        if not self.a_values or not self.characteristics:
            raise InvalidParameter("need at least one a value and one characteristic")
        for p in self.characteristics:
            FieldCtx(p)

    def cells(self):
        for t in range(self.t_min, self.t_max + 1):
            for a in self.a_values:
                for p in self.characteristics:
                    yield t, a, p


@dataclass(frozen=True)
class SweepRow:
    t: int
    a: str
    characteristic: int
    verdict: bool | None
    witness: str = ""
    twin_peak_rank: int | None = None
    status: str = "ok"

    def verdict_text(self) -> str:
        if self.verdict is None:
            return self.status
        return "true" if self.verdict else "false"


def _reason(exc: Exception) -> str:
    for cls, text in REASONS.items():
        if isinstance(exc, cls):
            return f"n/a ({text})"
    return f"n/a ({exc})"


def evaluate_cell(t: int, a_text: str, characteristic: int, prop: str) -> SweepRow:
    """One sweep cell; domain errors become an ``n/a`` row instead of propagating."""
    try:
        ctx = FieldCtx(characteristic)
        a = scalar_from_string(a_text, ctx)
        if prop == "WLP":
            report = wlp_via_det(t, a, ctx)
            entry = report.degree_data[0]
            w = report.witness
            witness = f"b={w['b']},c={w['c']}" if w else "-"
        else:
            ideal = ideal_I(t, ctx) if a.is_zero() else ideal_J(t, a)
            report = slp_full(ideal, linear_form(1, 1, ctx))
            entry = next((e for e in report.degree_data if e.d == t and e.k == 1), None)
            witness = report.witness["linear_form"] if report.witness else "-"
        return SweepRow(t, a_text, characteristic, report.verdict, witness, entry.rank if entry else None)
    except LefschetzError as exc:
        return SweepRow(t, a_text, characteristic, None, "-", None, _reason(exc))


def _evaluate(args):
    return evaluate_cell(*args)


def sweep(spec: SweepSpec, jobs: int = 1) -> list[SweepRow]:
    """Rows ordered by t, then a, then characteristic, whatever ``jobs`` is."""
    cells = [(t, a, p, spec.property) for t, a, p in spec.cells()]
    if jobs > 1 and len(cells) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_evaluate, cells))
    return [_evaluate(c) for c in cells]


def format_table(rows: list[SweepRow]) -> str:
    header = ("t", "a", "char", "verdict", "witness", "twin_peak_rank")
    body = [
        (str(r.t), r.a, str(r.characteristic), r.verdict_text(), r.witness,
         "-" if r.twin_peak_rank is None else str(r.twin_peak_rank))
        for r in rows
    ]
    widths = [max(len(x) for x in col) for col in zip(header, *body)]
    lines = ["  ".join(x.ljust(w) for x, w in zip(line, widths)).rstrip() for line in [header, *body]]
    return "\n".join(lines)


def to_structured(spec: SweepSpec, rows: list[SweepRow]) -> str:
    doc = {
        "spec": dict(asdict(spec), a_values=list(spec.a_values), characteristics=list(spec.characteristics)),
        "rows": [asdict(r) for r in rows],
    }
    return json.dumps(doc, sort_keys=True, indent=2)


def from_structured(text: str) -> tuple[SweepSpec, list[SweepRow]]:
    doc = json.loads(text)
    s = doc["spec"]
    spec = SweepSpec(
        s["t_min"], s["t_max"], tuple(s["a_values"]), tuple(s["characteristics"]), s["property"], s["output_format"]
    )
    return spec, [SweepRow(**r) for r in doc["rows"]]
