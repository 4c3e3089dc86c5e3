"""Dual bottom-up / top-down classification of YANG nodes."""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Optional

from ..namespaces import STRUCTURAL_KEYWORDS, child_paths, segment
from ..yang.ast import Diagnostic, Severity, YangError, YangModule, YangStatement


class Classification(enum.Enum):
    ATTRIBUTE = "Attribute"
    COMPLEX_DATATYPE = "ComplexDatatype"
    CLASS = "Class"
    PREFIX = "Prefix"
    METHOD = "Method"
    PACKAGE = "Package"
    UNDECIDED = "Undecided"


class TransformError(YangError):
    pass


ATTRIBUTE_NODES = frozenset({"leaf", "leaf-list", "anyxml", "anydata", "uses"})
METHOD_NODES = frozenset({"rpc", "action"})
COMPOSITE_NODES = frozenset({"container", "list", "notification"})
DATA_CHILDREN = frozenset({"container", "list", "leaf", "leaf-list", "choice",
                           "anyxml", "anydata", "uses", "notification",
                           "action"})
CLASSIFIABLE = ATTRIBUTE_NODES | METHOD_NODES | COMPOSITE_NODES | {
    "choice", "case", "grouping", "input", "output"}
OBJECT_LIKE = frozenset({Classification.COMPLEX_DATATYPE, Classification.CLASS,
                         Classification.PREFIX, Classification.UNDECIDED})

C = Classification


def data_children(node: YangStatement) -> list[YangStatement]:
    return [c for c in node.children if c.keyword in DATA_CHILDREN]


def _require_classifiable(node: YangStatement) -> None:
    if node.keyword not in CLASSIFIABLE:
        raise TransformError([Diagnostic(
            Severity.ERROR, f"{node.keyword} is not a data node",
            rule="classify")])


def classify_bottom_up(node: YangStatement) -> Classification:
    """Classify from the leaves upward."""
    _require_classifiable(node)
    kw = node.keyword
    if kw in ATTRIBUTE_NODES:
        return C.ATTRIBUTE
    if kw in METHOD_NODES:
        return C.METHOD
    if kw in ("choice", "case"):
        return C.CLASS
    if kw in ("input", "output"):
        return C.COMPLEX_DATATYPE
    kids = data_children(node)
    if kw == "grouping":
        if len(kids) == 1 and kids[0].keyword in ("container", "list", "choice"):
            return C.PREFIX
        return C.CLASS
    if not kids:
        return C.UNDECIDED if kw == "container" else C.COMPLEX_DATATYPE
    values = [classify_bottom_up(k) for k in kids]
    if all(v is C.ATTRIBUTE for v in values):
        return C.COMPLEX_DATATYPE
    if all(v in OBJECT_LIKE for v in values):
        return C.PREFIX
    return C.CLASS


def classify_top_down(node: YangStatement,
                      parent_context: Optional[Classification]) -> Classification:
    """Classify from the root downward.

    ``parent_context`` is the classification of the parent (``Package`` at
    module level); ``None`` means the parent was not classified yet.
    """
    if parent_context is None:
        raise TransformError([Diagnostic(
            Severity.ERROR, "ancestor not classified", rule="classify")])
    _require_classifiable(node)
    kw = node.keyword
    if kw in ATTRIBUTE_NODES:
        return C.ATTRIBUTE
    if kw in METHOD_NODES:
        return C.METHOD
    if kw in ("choice", "case", "grouping", "input", "output"):
        return classify_bottom_up(node)
    kids = data_children(node)
    if not kids:
        return C.PREFIX if kw == "container" else C.CLASS
    values = [classify_bottom_up(k) for k in kids]
    if all(v in OBJECT_LIKE for v in values):
        return C.PREFIX
    return C.CLASS


class DecisionKind(enum.Enum):
    LIST_DISCREPANCY = "ListDiscrepancy"
    CONTAINER_EMPTY = "ContainerEmpty"
    CONTAINER_DISCREPANCY = "ContainerDiscrepancy"


@dataclass(frozen=True)
class DecisionPoint:
    schema_path: str
    kind: DecisionKind
    bottom_up: Classification
    top_down: Classification
    options: tuple[Classification, ...]


@dataclass
class ClassifiedNode:
    path: str
    stmt: YangStatement
    bottom_up: Classification
    top_down: Classification


@dataclass
class ClassificationResult:
    nodes: dict[str, ClassifiedNode] = field(default_factory=dict)
    points: list[DecisionPoint] = field(default_factory=list)


_OPTION_ORDER = [C.PREFIX, C.COMPLEX_DATATYPE, C.CLASS]


def _structural_children(stmt: YangStatement, path: str):
    if stmt.keyword not in STRUCTURAL_KEYWORDS:
        return
    for child, cpath in zip(stmt.children, child_paths(path, stmt)):
        if child.keyword in CLASSIFIABLE or child.keyword == "augment":
            if child.keyword in ("input", "output") and \
                    stmt.keyword not in METHOD_NODES:
                continue
            yield child, cpath


def classify_module(module) -> ClassificationResult:
    """Run both passes over every classifiable node in document order."""
    root = module.root if isinstance(module, YangModule) else module
    result = ClassificationResult()

    def visit(stmt, path, context):
        for child, cpath in _structural_children(stmt, path):
            if child.keyword == "augment":
                visit(child, cpath, C.CLASS)
                continue
            bu = classify_bottom_up(child)
            td = classify_top_down(child, context)
            result.nodes[cpath] = ClassifiedNode(cpath, child, bu, td)
            point = _point_for(child, cpath, bu, td)
            if point is not None:
                result.points.append(point)
            visit(child, cpath, td)

    visit(root, segment(root), C.PACKAGE)
    return result


def _point_for(stmt, path, bu, td) -> Optional[DecisionPoint]:
    kw = stmt.keyword
    if kw == "container" and bu is C.UNDECIDED:
        return DecisionPoint(path, DecisionKind.CONTAINER_EMPTY, bu, td,
                             (C.PREFIX, C.CLASS))
    if bu is td:
        return None
    options = tuple(o for o in _OPTION_ORDER if o in (bu, td))
    kind = DecisionKind.CONTAINER_DISCREPANCY if kw == "container" \
        else DecisionKind.LIST_DISCREPANCY
    return DecisionPoint(path, kind, bu, td, options)


def detect_discrepancies(module) -> list[DecisionPoint]:
    return classify_module(module).points
