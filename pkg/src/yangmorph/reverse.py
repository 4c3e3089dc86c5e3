"""Rebuild YANG from a transformed UML model and verify round trips."""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import Iterable, Optional, Sequence

from .namespaces import LedgerEntry, segment
from .transform.decisions import DecisionRecord, Policy
from .uml import (ORIGIN_STEREOTYPES, Cardinality, DatatypeKind, UmlAttribute, UmlClass, UmlModel,
                  UmlProfile)
from .yang.ast import (Diagnostic, Severity, SourceKind, YangError, YangModule,
                       YangStatement)
from .yang.parser import parse_statement

# origin stereotype -> statement keyword it stands for
_CLASS_ORIGINS = {"list": "list", "container": "container",
                  "notification": "notification", "choice": "choice",
                  "case": "case", "grouping": "grouping", "augment": "augment",
                  "extension": "extension", "identity": "identity",
                  "submodule": "submodule"}
_ATTRIBUTE_KEYWORDS = ("leaf", "leaf-list", "anyxml", "anydata", "uses",
                       "feature")


class ReverseError(YangError):
    pass


def _fail(message: str, rule: str = "reverse") -> None:
    raise ReverseError([Diagnostic(Severity.ERROR, message, rule=rule)])


@dataclass
class _Node:
    keyword: str
    argument: Optional[str]
    parent: Optional[str]
    position: int


class _Rebuilder:
    def __init__(self, model: UmlModel, profile: UmlProfile, lenient: bool):
        self.model = model
        self.profile = profile
        self.lenient = lenient
        self.index = model.ledger.index()
        self.nodes: dict[str, _Node] = {}
        self.facets: dict[str, list[tuple[int, YangStatement]]] = {}
        self.roots: list[str] = []
        self._parsed: dict[str, YangStatement] = {}

    # -- facets -----------------------------------------------------------
    def parse(self, body: str) -> YangStatement:
        stmt = self._parsed.get(body)
        if stmt is None:
            try:
                stmt = parse_statement(body)
            except YangError as exc:
                raise ReverseError(exc.diagnostics) from None
            self._parsed[body] = stmt
        return stmt

    def add_facet(self, default_path: str, position: Optional[int],
                  origin: Optional[str], stmt: YangStatement) -> None:
        if position is None:
            return
        self.facets.setdefault(origin or default_path, []).append((position, stmt))

    def collect(self, element, path: str) -> None:
        for s in element.stereotypes:
            self.add_facet(path, s.position, s.origin,
                           YangStatement(s.tag, s.value))
        for f in list(element.constraints) + list(element.comments):
            if f.position is not None:
                self.add_facet(path, f.position, f.origin, self.parse(f.body))
        if isinstance(element, UmlAttribute):
            for f in (element.type_source, element.default_source):
                if f is not None and f.position is not None:
                    self.add_facet(path, f.position, f.origin, self.parse(f.body))

    # -- nodes ------------------------------------------------------------
    def add_node(self, path: str, keyword: str, argument: Optional[str],
                 parent: Optional[str], position: Optional[int]) -> None:
        if position is None:
            _fail(f"element for {path} carries no position")
        if path in self.nodes:
            _fail(f"schema path {path} reconstructed twice")
        self.nodes[path] = _Node(keyword, argument, parent, position)
        if parent is None or parent == "":
            self.roots.append(path)

    def entry(self, scope: str, name: str) -> Optional[LedgerEntry]:
        return self.index.get((scope, name))

    def classifier_entry(self, package: str, element) -> LedgerEntry:
        scope = "modules" if element.stereotype("submodule") else package
        entry = self.entry(scope, element.name)
        if entry is None:
            _fail(f"missing ledger entry for {package}::{element.name}", "ledger")
        return entry

    def check_classifier(self, element, entry: LedgerEntry) -> None:
        origins = [s for s in element.stereotypes
                   if s.tag in ORIGIN_STEREOTYPES and s.position is None]
        if len(origins) > 1:
            _fail(f"stereotype set inconsistent with structure: {element.name} "
                  f"carries {', '.join(s.tag for s in origins)}", "stereotype")
        if isinstance(element, UmlClass):
            origin = element.origin_stereotype()
            if origin is None:
                _fail(f"ambiguous reverse mapping: class {element.name} has no "
                      f"origin stereotype", "stereotype")
            expected = _CLASS_ORIGINS.get(origin.tag)
        else:
            origin = element.origin_stereotype()
            if element.kind in (DatatypeKind.ENUMERATION, DatatypeKind.ALIAS):
                expected = "typedef" if origin is None else None
            elif element.kind is DatatypeKind.COMPLEX:
                expected = origin.tag if origin is not None else \
                    ("input" if entry.keyword == "input" else "output")
            else:
                expected = None
        if expected != entry.keyword:
            _fail(f"stereotype set inconsistent with structure: "
                  f"{element.name} maps to {entry.keyword}", "stereotype")

    def check_attribute(self, attr: UmlAttribute, keyword: str) -> None:
        many = attr.cardinality is Cardinality.ZERO_TO_MANY
        if keyword not in _ATTRIBUTE_KEYWORDS or \
                (keyword == "leaf-list") != many or \
                (keyword in ("anyxml", "anydata")) != (attr.stereotype("anyxml") is not None):
            _fail(f"stereotype set inconsistent with structure: attribute "
                  f"{attr.name} maps to {keyword}", "stereotype")

    def run(self) -> None:
        for pkg in self.model.main_packages():
            mod_entry = self.entry("modules", pkg.name)
            if mod_entry is None:
                _fail(f"missing ledger entry for package {pkg.name}", "ledger")
            self.add_node(mod_entry.schema_path, mod_entry.keyword,
                          mod_entry.original_name, None, 0)
            for f in pkg.comments:
                if f.position is not None:
                    self.add_facet(mod_entry.schema_path, f.position, f.origin,
                                   self.parse(f.body))
            for element in pkg.classifiers:
                self.classifier(pkg.name, element, mod_entry)
        for other in self.model.packages:
            if other.kind == "main":
                continue
            for f in other.comments:
                if f.position is not None and f.origin:
                    self.add_facet(f.origin, f.position, None, self.parse(f.body))
        for red in self.profile.reductions:
            self.add_node(red.path, red.keyword, red.argument,
                          red.parent_path or None, red.position)
            for f in red.facets:
                self.add_facet(red.path, f.position, f.origin, self.parse(f.body))

    def classifier(self, package: str, element, mod_entry: LedgerEntry) -> None:
        if element.derived:
            path = mod_entry.schema_path  # PuK holds root-level members
            child_parent = path
        else:
            entry = self.classifier_entry(package, element)
            self.check_classifier(element, entry)
            path = entry.schema_path
            if entry.implicit:
                child_parent = entry.parent_path
            else:
                if entry.keyword != "submodule":
                    self.add_node(path, entry.keyword, entry.original_name,
                                  entry.parent_path, element.position)
                else:
                    self.add_node(path, entry.keyword, entry.original_name,
                                  None, 0)
                child_parent = path
            self.collect(element, path)
        for attr in element.attributes:
            self.attribute(element, attr, path, child_parent)
        for method in getattr(element, "methods", []):
            entry = self.entry(element.name, method.name)
            if entry is None or entry.keyword not in ("rpc", "action"):
                _fail(f"missing ledger entry for method {element.name}."
                      f"{method.name}", "ledger")
            self.add_node(entry.schema_path, entry.keyword, entry.original_name,
                          entry.parent_path, method.position)
            self.collect(method, entry.schema_path)

    def attribute(self, owner, attr: UmlAttribute, owner_path: str,
                  child_parent: str) -> None:
        if attr.derived:
            self.collect(attr, owner_path)
            return
        entry = self.entry(owner.name, attr.name)
        if entry is None:
            if not self.lenient:
                _fail(f"missing ledger entry for attribute {owner.name}."
                      f"{attr.name}", "ledger")
            if attr.stereotype("anyxml") is not None:
                keyword = attr.stereotype("anyxml").value or "anyxml"
            elif attr.cardinality is Cardinality.ZERO_TO_MANY:
                keyword = "leaf-list"
            else:
                keyword = "leaf"
            path = f"{child_parent}/{keyword}:{attr.name}"
            self.add_node(path, keyword, attr.name, child_parent, attr.position)
        else:
            self.check_attribute(attr, entry.keyword)
            path = entry.schema_path
            self.add_node(path, entry.keyword, entry.original_name,
                          entry.parent_path, attr.position)
        self.collect(attr, path)

    # -- assembly ---------------------------------------------------------
    def build(self, path: str) -> YangStatement:
        node = self.nodes[path]
        kids: list[tuple[int, object]] = []
        kids.extend(self.facets.get(path, []))
        kids.extend((n.position, p) for p, n in self.children_of.get(path, []))
        kids.sort(key=lambda k: k[0])
        for a, b in zip(kids, kids[1:]):
            if a[0] == b[0]:
                _fail(f"two children claim position {a[0]} under {path}")
        children = tuple(self.build(k) if isinstance(k, str) else k
                         for _, k in kids)
        return YangStatement(node.keyword, node.argument, children)

    def assemble(self) -> list[YangStatement]:
        self.children_of: dict[str, list] = {}
        for p, n in self.nodes.items():
            if n.parent:
                if n.parent not in self.nodes:
                    _fail(f"parent {n.parent} of {p} was not reconstructed")
                self.children_of.setdefault(n.parent, []).append((p, n))
        for origin in self.facets:
            if origin not in self.nodes:
                _fail(f"facet origin {origin} was not reconstructed")
        return [self.build(r) for r in self.roots]


def revert_all(model: UmlModel, profile: UmlProfile,
               lenient: bool = False) -> list[YangModule]:
    """Rebuild every module and submodule represented in the model."""
    rb = _Rebuilder(model, profile, lenient)
    rb.run()
    return [YangModule(root, SourceKind.YANG_TEXT) for root in rb.assemble()]


def revert(model: UmlModel, profile: UmlProfile,
           lenient: bool = False) -> YangModule:
    """Rebuild the main module of a model produced by ``transform``."""
    modules = revert_all(model, profile, lenient)
    if not modules:
        _fail("model holds no module")
    return modules[0]


@dataclass
class RoundtripReport:
    equal: bool
    differences: list[dict] = field(default_factory=list)
    original_statement_count: int = 0
    recovered_statement_count: int = 0

    def to_json(self) -> str:
        return json.dumps(asdict(self), indent=2, sort_keys=True) + "\n"


MAX_DIFFERENCES = 50


def _head(stmt: Optional[YangStatement]) -> Optional[str]:
    if stmt is None:
        return None
    return segment(stmt)


def compare(expected: YangStatement, actual: YangStatement) -> list[dict]:
    """Order-sensitive structural differences, at most 50."""
    diffs: list[dict] = []

    def walk(e, a, path):
        if len(diffs) >= MAX_DIFFERENCES:
            return
        if e.keyword != a.keyword or e.argument != a.argument:
            diffs.append({"schema_path": path, "expected": _head(e),
                          "actual": _head(a)})
            return
        n = max(len(e.children), len(a.children))
        for i in range(n):
            ec = e.children[i] if i < len(e.children) else None
            ac = a.children[i] if i < len(a.children) else None
            cpath = f"{path}/{_head(ec or ac)}"
            if ec is None or ac is None:
                if len(diffs) < MAX_DIFFERENCES:
                    diffs.append({"schema_path": cpath, "expected": _head(ec),
                                  "actual": _head(ac)})
                continue
            walk(ec, ac, cpath)

    walk(expected, actual, segment(expected))
    return diffs


def roundtrip_check(module: YangModule, records: Iterable[DecisionRecord] = (),
                    policy: Policy = Policy.PREFER_REDUCTION,
                    includes: Sequence[YangModule] = (),
                    through_xmi: bool = False) -> RoundtripReport:
    """Transform then revert, and compare with the original AST."""
    from .transform.mapper import transform
    model, profile = transform(module, records, policy, includes)
    if through_xmi:
        from .emit.xmi import emit_xmi, import_xmi
        model, profile = import_xmi(*emit_xmi(model, profile))
    return compare_models(module, model, profile)


def compare_models(module: YangModule, model: UmlModel,
                   profile: UmlProfile) -> RoundtripReport:
    recovered = revert(model, profile, lenient=True)
    diffs = compare(module.root, recovered.root)
    return RoundtripReport(not diffs, diffs, module.root.count(),
                           recovered.root.count())
