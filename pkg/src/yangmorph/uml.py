"""UML object model targeted by the transformer, its profile and metrics."""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Optional, Union

from .namespaces import NameLedger
from .yang.ast import Diagnostic, Severity, YangError

STEREOTYPE_TAGS = (
    "config", "key", "mandatory", "ordered-by", "presence", "require-instance",
    "status", "unique", "choice", "case", "anyxml", "grouping", "augment",
    "extension", "notification", "list", "container", "submodule", "puk",
    "identity",
)
# Descriptive substatements carried as stereotypes.
FACET_STEREOTYPES = frozenset(STEREOTYPE_TAGS[:8])
# Stereotypes naming the YANG statement a classifier came from.
ORIGIN_STEREOTYPES = frozenset({
    "choice", "case", "grouping", "augment", "extension", "notification",
    "list", "container", "submodule", "puk", "identity"})

PRIMITIVES = (
    "binary", "bits", "boolean", "decimal64", "empty", "enumeration",
    "identityref", "instance-identifier", "int8", "int16", "int32", "int64",
    "leafref", "string", "uint8", "uint16", "uint32", "uint64", "union",
    "anyxml", "anydata",
)


class UmlError(YangError):
    pass


class Cardinality(enum.Enum):
    ONE = "1"
    ZERO_TO_MANY = "0..*"


class DatatypeKind(enum.Enum):
    COMPLEX = "complex"
    ENUMERATION = "enumeration"
    ALIAS = "alias"
    EXTERNAL = "external"


class AssociationKind(enum.Enum):
    COMPOSITION = "composition"
    REFERENCE = "reference"
    GENERALIZATION = "generalization"


@dataclass
class Stereotype:
    tag: str
    value: Optional[str] = None
    position: Optional[int] = None
    origin: Optional[str] = None

    def __post_init__(self):
        if self.tag not in STEREOTYPE_TAGS:
            raise UmlError([Diagnostic(Severity.ERROR,
                                       f"unknown stereotype tag {self.tag!r}",
                                       rule="stereotype")])

    def label(self) -> str:
        return self.tag if self.value is None else f"{self.tag}:{self.value}"


@dataclass
class Facet:
    """A YANG substatement kept verbatim (as YANG text) on a UML element."""
    body: str
    position: Optional[int] = None
    origin: Optional[str] = None


@dataclass
class _Annotated:
    stereotypes: list[Stereotype] = field(default_factory=list)
    constraints: list[Facet] = field(default_factory=list)
    comments: list[Facet] = field(default_factory=list)

    def stereotype(self, tag: str) -> Optional[Stereotype]:
        for s in self.stereotypes:
            if s.tag == tag:
                return s
        return None

    def origin_stereotype(self) -> Optional[Stereotype]:
        for s in self.stereotypes:
            if s.tag in ORIGIN_STEREOTYPES and s.position is None:
                return s
        return None


@dataclass
class UmlAttribute(_Annotated):
    name: str = ""
    type: str = "string"
    cardinality: Cardinality = Cardinality.ONE
    default: Optional[str] = None
    type_source: Optional[Facet] = None
    default_source: Optional[Facet] = None
    position: Optional[int] = None
    derived: bool = False


@dataclass
class UmlParameter:
    name: str
    type: str


@dataclass
class UmlMethod(_Annotated):
    name: str = ""
    parameters: list[UmlParameter] = field(default_factory=list)
    return_type: Optional[str] = None
    position: Optional[int] = None


@dataclass
class UmlClass(_Annotated):
    name: str = ""
    attributes: list[UmlAttribute] = field(default_factory=list)
    methods: list[UmlMethod] = field(default_factory=list)
    generalization_of: Optional[str] = None
    position: Optional[int] = None
    derived: bool = False


@dataclass
class UmlDatatype(_Annotated):
    name: str = ""
    kind: DatatypeKind = DatatypeKind.COMPLEX
    attributes: list[UmlAttribute] = field(default_factory=list)
    literals: list[str] = field(default_factory=list)
    position: Optional[int] = None
    derived: bool = False


Classifier = Union[UmlClass, UmlDatatype]


@dataclass
class UmlPackage:
    name: str
    kind: str = "main"  # "main" or "import"
    classifiers: list = field(default_factory=list)
    comments: list[Facet] = field(default_factory=list)

    def find(self, name: str) -> Optional[Classifier]:
        for c in self.classifiers:
            if c.name == name:
                return c
        return None


@dataclass
class UmlAssociation:
    source: str  # qualified "package::Name"
    target: str
    kind: AssociationKind
    label: Optional[str] = None

    def key(self) -> tuple:
        return (self.source, self.target, self.kind, self.label)


@dataclass
class AssociationTemplate:
    """An association whose endpoints are schema paths or qualified names,
    queued until every object exists."""
    source: str
    target: str
    kind: AssociationKind
    label: Optional[str] = None
    discovered_at: str = ""


@dataclass
class ReducedNode:
    """A composite statement that produced no UML element of its own."""
    path: str
    parent_path: str
    keyword: str
    argument: Optional[str]
    position: int
    root: str
    facets: list[Facet] = field(default_factory=list)


@dataclass
class UmlProfile:
    name: str
    stereotypes: list[str] = field(default_factory=lambda: list(STEREOTYPE_TAGS))
    primitives: list[str] = field(default_factory=lambda: list(PRIMITIVES))
    decisions: list = field(default_factory=list)  # DecisionRecord
    reductions: list[ReducedNode] = field(default_factory=list)


@dataclass
class UmlModel:
    name: str
    packages: list[UmlPackage] = field(default_factory=list)
    associations: list[UmlAssociation] = field(default_factory=list)
    ledger: NameLedger = field(default_factory=NameLedger)
    pending: list[AssociationTemplate] = field(default_factory=list,
                                               compare=False, repr=False)
    element_of: dict[str, str] = field(default_factory=dict, compare=False,
                                       repr=False)

    def main_packages(self) -> list[UmlPackage]:
        return [p for p in self.packages if p.kind == "main"]

    def package(self, name: str) -> Optional[UmlPackage]:
        for p in self.packages:
            if p.name == name:
                return p
        return None

    def resolve(self, qualified: str) -> Optional[Classifier]:
        pkg, _, name = qualified.partition("::")
        package = self.package(pkg)
        return package.find(name) if package is not None else None

    def classifiers(self):
        for p in self.packages:
            for c in p.classifiers:
                yield p, c


def add_association(model: UmlModel, template: AssociationTemplate) -> UmlModel:
    """Queue an association; it is materialized by ``finalize``."""
    key = (template.source, template.target, template.kind, template.label)
    for t in model.pending:
        if (t.source, t.target, t.kind, t.label) == key:
            return model
    model.pending.append(template)
    return model


def _endpoint(model: UmlModel, ref: str) -> Optional[str]:
    if ref in model.element_of:
        return model.element_of[ref]
    if "::" in ref and model.resolve(ref) is not None:
        return ref
    return None


def finalize(model: UmlModel) -> UmlModel:
    """Resolve queued templates into root-owned associations."""
    seen = {a.key() for a in model.associations}
    for t in model.pending:
        src, dst = _endpoint(model, t.source), _endpoint(model, t.target)
        if src is None or dst is None:
            missing = t.source if src is None else t.target
            raise UmlError([Diagnostic(
                Severity.ERROR, f"dangling association at {t.discovered_at or missing}"
                f" (endpoint {missing})", rule="association")])
        assoc = UmlAssociation(src, dst, t.kind, t.label)
        if assoc.key() not in seen:
            seen.add(assoc.key())
            model.associations.append(assoc)
    model.pending.clear()
    check_integrity(model)
    return model


def check_integrity(model: UmlModel) -> None:
    for a in model.associations:
        for end in (a.source, a.target):
            if model.resolve(end) is None:
                raise UmlError([Diagnostic(
                    Severity.ERROR, f"dangling association endpoint {end}",
                    rule="association")])
        if a.kind is AssociationKind.GENERALIZATION:
            if not (isinstance(model.resolve(a.source), UmlClass) and
                    isinstance(model.resolve(a.target), UmlClass)):
                raise UmlError([Diagnostic(
                    Severity.ERROR, "generalization must join two classes",
                    rule="association")])


@dataclass(frozen=True)
class Metrics:
    depth: int
    classes: int
    types: int
    attributes: int
    references: int

    def as_tuple(self) -> tuple[int, int, int, int, int]:
        return (self.depth, self.classes, self.types, self.attributes,
                self.references)

    def to_json(self) -> dict:
        return {"depth": self.depth, "classes": self.classes,
                "types": self.types, "attributes": self.attributes,
                "references": self.references}

    @classmethod
    def from_json(cls, data) -> "Metrics":
        return cls(int(data["depth"]), int(data["classes"]),
                   int(data["types"]), int(data["attributes"]),
                   int(data["references"]))


def compute_metrics(model: UmlModel) -> Metrics:
    """Table-style size metrics over the main packages.

    Stub classifiers of import packages are not counted. Classifiers are
    never nested inside one another, so any non-empty model has depth 1.
    """
    classes = types = attributes = 0
    for pkg in model.main_packages():
        for c in pkg.classifiers:
            if isinstance(c, UmlClass):
                classes += 1
            elif c.kind in (DatatypeKind.COMPLEX, DatatypeKind.ENUMERATION):
                types += 1
            attributes += len(c.attributes)
    depth = _containment_depth(model)
    return Metrics(depth, classes, types, attributes, len(model.associations))


def _containment_depth(model: UmlModel) -> int:
    # diagram objects are package-level only; nesting would show up as a
    # classifier owning another classifier, which the model cannot express
    has_objects = any(p.classifiers for p in model.main_packages())
    return 1 if has_objects else 0
