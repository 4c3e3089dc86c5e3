"""Decision records and the policies that resolve classification conflicts."""
from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Sequence

from ..yang.ast import Diagnostic, Severity, YangError
from .classify import (Classification, ClassificationResult, DecisionPoint,
                       classify_module)

C = Classification


class DecisionError(YangError):
    """Raised for unresolved or invalid decisions."""

    def __init__(self, diagnostics, unresolved: Sequence[DecisionPoint] = ()):
        super().__init__(diagnostics)
        self.unresolved = list(unresolved)


class Provenance(enum.Enum):
    INTERACTIVE = "Interactive"
    FILE = "File"
    DEFAULT_POLICY = "DefaultPolicy"


class Policy(enum.Enum):
    PREFER_REDUCTION = "prefer-reduction"
    PREFER_STRUCTURE = "prefer-structure"
    REQUIRE_EXPLICIT = "require-explicit"


@dataclass(frozen=True)
class DecisionRecord:
    schema_path: str
    choice: Classification
    provenance: Provenance = Provenance.FILE

    def to_json(self) -> dict:
        return {"path": self.schema_path, "choice": self.choice.value,
                "provenance": self.provenance.value}

    @classmethod
    def from_json(cls, data: Mapping) -> "DecisionRecord":
        try:
            return cls(data["path"], Classification(data["choice"]),
                       Provenance(data.get("provenance", "File")))
        except (KeyError, ValueError, TypeError) as exc:
            raise DecisionError([Diagnostic(
                Severity.ERROR, f"invalid decision record {data!r}: {exc}",
                rule="decision")]) from None


_REDUCTION_RANK = [C.PREFIX, C.COMPLEX_DATATYPE, C.CLASS]


def policy_choice(point: DecisionPoint, policy: Policy) -> Optional[Classification]:
    if policy is Policy.PREFER_REDUCTION:
        return next(o for o in _REDUCTION_RANK if o in point.options)
    if policy is Policy.PREFER_STRUCTURE:
        return C.CLASS if C.CLASS in point.options else point.options[-1]
    return None


def resolve(points: Sequence[DecisionPoint], records: Iterable[DecisionRecord],
            policy: Policy = Policy.PREFER_REDUCTION) -> list[DecisionRecord]:
    """Give every decision point a record, in point order.

    Records for paths without a point are ignored. Raises DecisionError when
    a record picks an option the point does not offer, or when the policy is
    require-explicit and points remain open.
    """
    given = {r.schema_path: r for r in records}
    out = []
    errors = []
    unresolved = []
    for point in points:
        rec = given.get(point.schema_path)
        if rec is not None:
            if rec.choice not in point.options:
                errors.append(Diagnostic(
                    Severity.ERROR,
                    f"choice not in options: {rec.choice.value} for "
                    f"{point.schema_path}", rule="decision"))
                continue
            out.append(rec)
            continue
        choice = policy_choice(point, policy)
        if choice is None:
            unresolved.append(point)
            errors.append(Diagnostic(
                Severity.ERROR, f"unresolved decision at {point.schema_path}",
                rule="decision"))
            continue
        out.append(DecisionRecord(point.schema_path, choice,
                                  Provenance.DEFAULT_POLICY))
    if errors:
        raise DecisionError(errors, unresolved)
    return out


def final_classifications(result: ClassificationResult,
                          records: Iterable[DecisionRecord]) -> dict[str, Classification]:
    """Final classification per schema path after applying the records."""
    chosen = {r.schema_path: r.choice for r in records}
    final = {}
    for path, node in result.nodes.items():
        if path in chosen:
            final[path] = chosen[path]
        elif node.bottom_up is node.top_down:
            final[path] = node.bottom_up
        else:
            raise DecisionError([Diagnostic(
                Severity.ERROR, f"undecided node {path}", rule="decision")])
    return final


def classify_and_resolve(module, records: Iterable[DecisionRecord] = (),
                         policy: Policy = Policy.PREFER_REDUCTION):
    result = classify_module(module)
    resolved = resolve(result.points, records, policy)
    return result, resolved, final_classifications(result, resolved)


def records_to_json(records: Sequence[DecisionRecord]) -> str:
    return json.dumps([r.to_json() for r in records], indent=2) + "\n"


def records_from_json(text: str) -> list[DecisionRecord]:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DecisionError([Diagnostic(
            Severity.ERROR, f"decision file is not JSON: {exc}",
            (exc.lineno, exc.colno), "decision")]) from None
    if not isinstance(data, list):
        raise DecisionError([Diagnostic(
            Severity.ERROR, "decision file must hold a JSON array",
            rule="decision")])
    return [DecisionRecord.from_json(d) for d in data]
