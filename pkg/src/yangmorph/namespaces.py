"""Name conventions: illegal-character removal, collision prefixes and the
bijective name ledger that maps UML names back to YANG schema paths."""
from __future__ import annotations

import enum
import json
import re
from dataclasses import asdict, dataclass, field
from typing import Iterable, Iterator, Mapping, Optional, Sequence, Union

from .yang.ast import Diagnostic, Severity, YangError, YangModule, YangStatement

ILLEGAL = "-/_"
RESERVED = frozenset({"PuK"})
_OTHER_ILLEGAL = re.compile(r"[^A-Za-z0-9\-/_]")


class NamingError(YangError):
    pass


class NamespaceKind(enum.Enum):
    MODULE = "ModuleSpace"
    EXTENSION = "ExtensionSpace"
    FEATURE = "FeatureSpace"
    IDENTITY = "IdentitySpace"
    TYPEDEF = "TypedefSpace"
    GROUPING = "GroupingSpace"
    REMAINING = "RemainingSpace"


KIND_OF_KEYWORD = {
    "module": NamespaceKind.MODULE, "submodule": NamespaceKind.MODULE,
    "extension": NamespaceKind.EXTENSION, "feature": NamespaceKind.FEATURE,
    "identity": NamespaceKind.IDENTITY, "typedef": NamespaceKind.TYPEDEF,
    "grouping": NamespaceKind.GROUPING,
}
COLLISION_PREFIX = {
    NamespaceKind.EXTENSION: "ext_", NamespaceKind.FEATURE: "feat_",
    NamespaceKind.IDENTITY: "iden_", NamespaceKind.TYPEDEF: "td_",
    NamespaceKind.GROUPING: "gr_",
}

# Statements that become UML elements of their own.
NAMED_KEYWORDS = frozenset({
    "module", "submodule", "extension", "feature", "identity", "typedef",
    "grouping", "container", "list", "leaf", "leaf-list", "choice", "case",
    "anyxml", "anydata", "uses", "rpc", "action", "input", "output",
    "notification", "augment",
})
# Statements whose named children are mapped individually; all other
# statements keep their whole subtree as descriptive facets.
STRUCTURAL_KEYWORDS = frozenset({
    "module", "submodule", "container", "list", "grouping", "choice", "case",
    "augment", "rpc", "action", "input", "output", "notification",
})
ATTRIBUTE_KEYWORDS = frozenset({"leaf", "leaf-list", "anyxml", "anydata",
                                "uses", "feature"})
METHOD_KEYWORDS = frozenset({"rpc", "action"})
DATA_KEYWORDS = frozenset({"container", "list", "leaf", "leaf-list", "choice",
                           "anyxml", "anydata", "uses", "notification", "rpc",
                           "action"})
# Classifier names in the remaining space start upper case.
CLASS_NAMED_KEYWORDS = frozenset({"container", "list", "notification",
                                  "choice", "case"})
SHORTHAND_CASE_KEYWORDS = frozenset({"container", "list", "leaf", "leaf-list",
                                     "anyxml", "anydata", "choice"})


def sanitize(name: str) -> str:
    """Delete ``-``, ``/`` and ``_``; raises NamingError if nothing remains."""
    if not name:
        raise NamingError([Diagnostic(Severity.ERROR, "empty name", rule="name")])
    out = "".join(ch for ch in name if ch not in ILLEGAL)
    if not out:
        raise NamingError([Diagnostic(
            Severity.ERROR, f"name {name!r} consists only of illegal characters",
            rule="name")])
    return out


def original_has_other_illegal(name: Optional[str]) -> bool:
    """True for characters beyond letters, digits and the removed set."""
    return bool(name) and _OTHER_ILLEGAL.search(name) is not None


def removed_characters(name: str) -> list[tuple[int, str]]:
    return [(i, ch) for i, ch in enumerate(name) if ch in ILLEGAL]


def restore_characters(sanitized: str, removed: Sequence[tuple[int, str]]) -> str:
    """Inverse of sanitize given the recorded deletions."""
    chars = list(sanitized)
    for pos, ch in sorted(removed):
        chars.insert(pos, ch)
    return "".join(chars)


def camel_join(*parts: str) -> str:
    return "".join(p[:1].upper() + p[1:] for p in parts if p)


def local_name(ref: str) -> str:
    return ref.split(":", 1)[1] if ":" in ref else ref


def segment(stmt: YangStatement) -> str:
    if stmt.argument is None:
        return stmt.keyword
    return f"{stmt.keyword}:{stmt.argument}"


def child_paths(parent_path: str, stmt: YangStatement) -> list[str]:
    """Schema paths of all children; repeated segments get an ``[n]`` suffix."""
    seen: dict[str, int] = {}
    out = []
    for child in stmt.children:
        seg = segment(child)
        n = seen.get(seg, 0) + 1
        seen[seg] = n
        out.append(f"{parent_path}/{seg}" + (f"[{n}]" if n > 1 else ""))
    return out


@dataclass(frozen=True)
class PathInfo:
    stmt: YangStatement
    path: str
    parent_path: Optional[str]
    position: int
    ancestors: tuple[YangStatement, ...]


def walk_named(root: YangStatement) -> Iterator[PathInfo]:
    """Document-order walk over named statements in structural positions."""
    root_path = segment(root)

    def visit(stmt, path, ancestors):
        if stmt.keyword not in STRUCTURAL_KEYWORDS:
            return
        for pos, (child, cpath) in enumerate(zip(stmt.children,
                                                 child_paths(path, stmt))):
            if child.keyword in NAMED_KEYWORDS and \
                    child.keyword not in ("module", "submodule"):
                if child.keyword in ("input", "output") and \
                        stmt.keyword not in METHOD_KEYWORDS:
                    continue
                info = PathInfo(child, cpath, path, pos, ancestors + (stmt,))
                yield info
                yield from visit(child, cpath, ancestors + (stmt,))

    yield PathInfo(root, root_path, None, 0, ())
    yield from visit(root, root_path, ())


@dataclass
class LedgerEntry:
    schema_path: str
    parent_path: Optional[str]
    keyword: str
    original_name: Optional[str]
    uml_name: str
    namespace: NamespaceKind
    scope: str
    position: int
    root: str
    applied_prefix: Optional[str] = None
    applied_suffix: Optional[str] = None
    removed_characters: list = field(default_factory=list)
    implicit: bool = False

    def to_json(self) -> dict:
        data = asdict(self)
        data["namespace"] = self.namespace.value
        data["removed_characters"] = [list(p) for p in self.removed_characters]
        return data

    @classmethod
    def from_json(cls, data: Mapping) -> "LedgerEntry":
        data = dict(data)
        data["namespace"] = NamespaceKind(data["namespace"])
        data["removed_characters"] = [tuple(p) for p in
                                      data.get("removed_characters", [])]
        return cls(**data)


@dataclass
class NameLedger:
    entries: list[LedgerEntry] = field(default_factory=list)
    warnings: list[Diagnostic] = field(default_factory=list)

    def by_path(self, path: str) -> Optional[LedgerEntry]:
        for e in self.entries:
            if e.schema_path == path:
                return e
        return None

    def lookup(self, uml_name: str, scope: str) -> Optional[LedgerEntry]:
        for e in self.entries:
            if e.uml_name == uml_name and e.scope == scope:
                return e
        return None

    def index(self) -> dict[tuple[str, str], LedgerEntry]:
        return {(e.scope, e.uml_name): e for e in self.entries}

    def path_index(self) -> dict[str, LedgerEntry]:
        return {e.schema_path: e for e in self.entries}

    def to_json(self) -> str:
        return json.dumps([e.to_json() for e in self.entries], indent=1,
                          sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "NameLedger":
        return cls([LedgerEntry.from_json(d) for d in json.loads(text)])

    def __eq__(self, other):
        return isinstance(other, NameLedger) and self.entries == other.entries


def recover_original(uml_name: str, namespace: NamespaceKind,
                     ledger: NameLedger, scope: Optional[str] = None) -> str:
    """Return the schema path that received ``uml_name``."""
    hits = [e for e in ledger.entries
            if e.uml_name == uml_name and e.namespace is namespace
            and (scope is None or e.scope == scope)]
    if not hits:
        raise NamingError([Diagnostic(
            Severity.ERROR, f"unknown uml name {uml_name!r} in "
            f"{namespace.value}", rule="ledger")])
    if len(hits) > 1:
        raise NamingError([Diagnostic(
            Severity.ERROR, f"uml name {uml_name!r} is ambiguous in "
            f"{namespace.value}; give a scope", rule="ledger")])
    return hits[0].schema_path


# Classification names used by the name assigner. Kept as strings so this
# module stays independent of the transformer.
PREFIX = "Prefix"


class _Assigner:
    def __init__(self, classifications: Mapping[str, object]):
        self.cls = {p: getattr(c, "value", c) for p, c in classifications.items()}
        self.ledger = NameLedger()
        self.taken: dict[str, set[str]] = {}
        self.virtual: dict[str, str] = {}  # names of prefix-reduced nodes
        self.names: dict[str, str] = {}    # path -> uml name
        self.package = ""
        self.root_owner: dict[str, str] = {}
        self.other_space_names: dict[NamespaceKind, set[str]] = {}

    def is_prefix(self, path: str) -> bool:
        return self.cls.get(path) == PREFIX

    def claim(self, scope: str, base: str, info: PathInfo) -> tuple[str, Optional[str], Optional[str]]:
        taken = self.taken.setdefault(scope, set(RESERVED))
        if base not in taken:
            taken.add(base)
            return base, None, None
        parts = []
        for anc in reversed(info.ancestors[1:]):
            parts.insert(0, self.ancestor_label(anc))
            candidate = camel_join(*parts, base)
            if candidate not in taken:
                taken.add(candidate)
                return candidate, camel_join(*parts), None
        n = 2
        while f"{base}_{n}" in taken:
            n += 1
        taken.add(f"{base}_{n}")
        return f"{base}_{n}", None, f"_{n}"

    @staticmethod
    def ancestor_label(stmt: YangStatement) -> str:
        if stmt.argument is None:
            return stmt.keyword
        return sanitize(local_name(stmt.argument)) if stmt.keyword != "augment" \
            else augment_base(stmt.argument)

    def owner_of(self, info: PathInfo, paths: Mapping[int, str]) -> str:
        # nearest ancestor that is a UML element
        for anc in reversed(info.ancestors):
            path = paths[id(anc)]
            if anc.keyword in ("module", "submodule"):
                return self.root_owner[path]
            if not self.is_prefix(path):
                return self.names[path]
        raise AssertionError("no owner")


def augment_base(target: str) -> str:
    segs = [local_name(s) for s in target.split("/") if s]
    names = []
    for s in segs:
        try:
            names.append(sanitize(s))
        except NamingError:
            continue
    return camel_join("augment", *names)


def _collect_space_names(roots: Sequence[YangStatement]) -> dict[NamespaceKind, set[str]]:
    spaces: dict[NamespaceKind, set[str]] = {k: set() for k in NamespaceKind}
    for root in roots:
        for info in walk_named(root):
            kw = info.stmt.keyword
            if kw in ("uses", "input", "output", "augment"):
                continue
            arg = info.stmt.argument
            if not arg:
                continue
            kind = KIND_OF_KEYWORD.get(kw, NamespaceKind.REMAINING)
            try:
                spaces[kind].add(sanitize(arg))
            except NamingError:
                pass
    return spaces


def _roots(modules) -> list[YangStatement]:
    if isinstance(modules, (YangModule, YangStatement)):
        modules = [modules]
    return [m.root if isinstance(m, YangModule) else m for m in modules]


def assign_names(modules: Union[YangModule, Iterable[YangModule]],
                 classifications: Optional[Mapping[str, object]] = None,
                 root_owners: Optional[Mapping[str, str]] = None) -> NameLedger:
    """Give every named statement a unique UML name.

    ``modules`` is the main module optionally followed by included
    submodules; they share one package. ``classifications`` maps schema
    paths to final classifications so prefix-reduced nodes are skipped and
    their names lifted onto their children. ``root_owners`` maps each root
    path to the classifier that holds its root-level members (default PuK).
    """
    roots = _roots(modules)
    a = _Assigner(classifications or {})
    spaces = _collect_space_names(roots)
    a.package = sanitize(roots[0].argument or "")
    for root in roots:
        rpath = segment(root)
        a.root_owner[rpath] = (root_owners or {}).get(rpath, "PuK")
    for i, root in enumerate(roots):
        _assign_root(a, root, spaces, is_main=(i == 0))
    return a.ledger


def _assign_root(a: _Assigner, root: YangStatement,
                 spaces: dict[NamespaceKind, set[str]], is_main: bool) -> None:
    paths: dict[int, str] = {}
    root_name = root.argument or ""
    for info in walk_named(root):
        stmt, path = info.stmt, info.path
        paths[id(stmt)] = path
        kw = stmt.keyword
        if kw in ("module", "submodule"):
            uml = sanitize(root_name)
            scope = "modules"
            taken = a.taken.setdefault(scope, set())
            if uml in taken:
                raise NamingError([Diagnostic(
                    Severity.ERROR, f"duplicate module name {root_name!r}",
                    rule="ledger")])
            taken.add(uml)
            a.names[path] = uml
            a.ledger.entries.append(LedgerEntry(
                path, None, kw, root_name, uml, NamespaceKind.MODULE, scope, 0,
                root_name, removed_characters=removed_characters(root_name)))
            continue
        implicit_case = (kw in SHORTHAND_CASE_KEYWORDS and
                         info.ancestors[-1].keyword == "choice")
        case_name = None
        if implicit_case:
            # the shorthand child sits inside an implicit case class
            case_path = f"{info.parent_path}/case:{stmt.argument}"
            case_base = camel_join(sanitize(stmt.argument))
            case_name, pfx, sfx = a.claim(a.package, case_base, info)
            a.names[case_path] = case_name
            a.ledger.entries.append(LedgerEntry(
                case_path, info.parent_path, "case", stmt.argument, case_name,
                NamespaceKind.REMAINING, a.package, info.position, root_name,
                pfx, sfx, removed_characters(stmt.argument), implicit=True))
        if a.is_prefix(path):
            parent = info.parent_path
            base = sanitize(stmt.argument or kw)
            if parent in a.virtual:
                base = camel_join(a.virtual[parent], base)
            a.virtual[path] = base
            continue
        if kw not in ("augment", "uses") and original_has_other_illegal(stmt.argument):
            a.ledger.warnings.append(Diagnostic(
                Severity.WARNING, f"name {stmt.argument!r} at {path} keeps "
                f"characters other UML tools may reject", stmt.source_span,
                "name"))
        kind = KIND_OF_KEYWORD.get(kw, NamespaceKind.REMAINING)
        applied_prefix = None
        removed: list = []
        original = stmt.argument
        if kind is not NamespaceKind.REMAINING:
            base = sanitize(original)
            removed = removed_characters(original)
            others = set().union(*(v for k, v in spaces.items() if k is not kind))
            if base in others:
                applied_prefix = COLLISION_PREFIX[kind]
                base = applied_prefix + base
        elif kw in ("input", "output"):
            base = camel_join(a.names[info.parent_path], kw.capitalize())
        elif kw == "augment":
            base = augment_base(original)
        elif kw == "uses":
            base = sanitize(local_name(original))
        else:
            base = sanitize(original)
            removed = removed_characters(original)
            if kw in CLASS_NAMED_KEYWORDS:
                base = camel_join(base)
            if info.parent_path in a.virtual:
                lift = a.virtual[info.parent_path]
                applied_prefix = camel_join(lift)
                base = camel_join(lift, base)
        if kw in ATTRIBUTE_KEYWORDS or kw in METHOD_KEYWORDS:
            scope = a.owner_of(info, paths)
        else:
            scope = a.package
        if case_name is not None and kw in ATTRIBUTE_KEYWORDS:
            scope = case_name
        uml, join_prefix, suffix = a.claim(scope, base, info)
        a.names[path] = uml
        a.ledger.entries.append(LedgerEntry(
            path, info.parent_path, kw, original, uml, kind, scope,
            info.position, root_name, join_prefix or applied_prefix, suffix,
            removed))
