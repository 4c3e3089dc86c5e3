"""Plain-text size metrics report."""
from __future__ import annotations

from typing import Optional

from ..uml import Metrics, UmlModel, compute_metrics

FIELDS = ("depth", "classes", "types", "attributes", "references")


def _row(values) -> str:
    return ", ".join(str(v) for v in values)


def _signed(v: int) -> str:
    return f"+{v}" if v > 0 else str(v)


def emit_metrics(model: UmlModel, comparison: Optional[Metrics] = None) -> str:
    m = compute_metrics(model)
    lines = [f"metrics: {', '.join(FIELDS)}", f"model: {_row(m.as_tuple())}"]
    if comparison is not None:
        lines.append(f"comparison: {_row(comparison.as_tuple())}")
        deltas = [a - b for a, b in zip(m.as_tuple(), comparison.as_tuple())]
        lines.append("delta: " + ", ".join(_signed(d) for d in deltas))
    return "\n".join(lines) + "\n"
