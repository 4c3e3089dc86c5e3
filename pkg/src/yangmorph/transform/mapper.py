"""Map a classified YANG module onto the UML object model."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Optional, Sequence

from ..namespaces import (ATTRIBUTE_KEYWORDS, METHOD_KEYWORDS, NAMED_KEYWORDS,
                          SHORTHAND_CASE_KEYWORDS, STRUCTURAL_KEYWORDS,
                          NameLedger, assign_names, child_paths, local_name,
                          sanitize, segment)
from ..uml import (FACET_STEREOTYPES, PRIMITIVES, AssociationKind,
                   AssociationTemplate, Cardinality, DatatypeKind, Facet,
                   ReducedNode, Stereotype, UmlAttribute, UmlClass,
                   UmlDatatype, UmlMethod, UmlModel, UmlPackage, UmlParameter,
                   UmlProfile, add_association, finalize)
from ..yang.ast import Diagnostic, Severity, YangModule, YangStatement
from ..yang.emit import emit_yang
from .classify import Classification, DecisionKind, TransformError
from .decisions import DecisionRecord, Policy, classify_and_resolve

C = Classification
CONSTRAINT_KEYWORDS = frozenset({"if-feature", "must", "when"})
KEPT_COMMENT = "kept for extension"
ANYXML_COMMENT = "payload: opaque XML content"
ROOT_MEMBER_KEYWORDS = frozenset({"leaf", "leaf-list", "anyxml", "anydata",
                                  "uses", "feature", "rpc", "container", "list",
                                  "choice", "notification"})


def facet_text(stmt: YangStatement) -> str:
    return emit_yang(stmt).rstrip("\n")


def is_named_child(child: YangStatement, parent: YangStatement) -> bool:
    if parent.keyword not in STRUCTURAL_KEYWORDS:
        return False
    if child.keyword not in NAMED_KEYWORDS or child.keyword in ("module", "submodule"):
        return False
    if child.keyword in ("input", "output"):
        return parent.keyword in METHOD_KEYWORDS
    return True


@dataclass
class _Ctx:
    path: str
    element: object
    qname: str
    contains: bool = True  # False inside reduced groupings


def _extend(data_path: Optional[tuple], name) -> Optional[tuple]:
    return None if data_path is None else data_path + (name,)


class _Scope:
    """Typedef and grouping names visible at a point of the tree."""

    def __init__(self, parent: Optional["_Scope"] = None):
        self.parent = parent
        self.typedefs: dict[str, str] = {}
        self.groupings: dict[str, str] = {}

    def find(self, table: str, name: str) -> Optional[str]:
        scope = self
        while scope is not None:
            hit = getattr(scope, table).get(name)
            if hit is not None:
                return hit
            scope = scope.parent
        return None


class _RootInfo:
    def __init__(self, root: YangStatement):
        self.root = root
        self.path = segment(root)
        if root.keyword == "submodule":
            belongs = root.find("belongs-to")
            self.prefix = belongs.arg_of("prefix") if belongs is not None else None
        else:
            self.prefix = root.arg_of("prefix")
        self.imports = {imp.arg_of("prefix"): imp.argument
                        for imp in root.find_all("import") if imp.arg_of("prefix")}


class _Mapper:
    def __init__(self, roots: Sequence[YangStatement],
                 final: dict[str, Classification], ledger: NameLedger,
                 points: dict[str, object], model: UmlModel,
                 profile: UmlProfile):
        self.roots = roots
        self.final = final
        self.ledger = ledger
        self.entries = ledger.path_index()
        self.points = points
        self.model = model
        self.profile = profile
        self.package: Optional[UmlPackage] = None
        self.order: list[str] = []  # element paths in creation order
        self.data_objects: list[str] = []
        self.parent_of: dict[str, str] = {}
        self.stmt_of: dict[str, YangStatement] = {}
        self.fixups: list[tuple[UmlAttribute, str, str]] = []
        self.links: list[tuple[str, str, AssociationKind, Optional[str], str]] = []
        self.global_scope = _Scope()
        self.identities: dict[str, str] = {}
        self.data_index: dict[tuple, str] = {}
        self.root_info: Optional[_RootInfo] = None

    # -- registration -----------------------------------------------------
    def register(self, path: str, element, data_object: bool = False) -> str:
        qname = f"{self.package.name}::{element.name}"
        self.model.element_of[path] = qname
        self.order.append(path)
        if data_object:
            self.data_objects.append(path)
        return qname

    def add_classifier(self, element) -> None:
        if self.package.find(element.name) is not None:
            raise TransformError([Diagnostic(
                Severity.ERROR, f"duplicate classifier {element.name}",
                rule="naming")])
        self.package.classifiers.append(element)

    def name_of(self, path: str) -> str:
        entry = self.entries.get(path)
        if entry is None:
            raise TransformError([Diagnostic(
                Severity.ERROR, f"no ledger entry for {path}", rule="naming")])
        return entry.uml_name

    # -- facets -----------------------------------------------------------
    def attach(self, element, child: YangStatement, pos: int,
               origin: Optional[str] = None) -> None:
        kw = child.keyword
        body = facet_text(child)
        if isinstance(element, UmlPackage):
            element.comments.append(Facet(body, pos, origin))
            return
        if kw in FACET_STEREOTYPES and not child.children:
            element.stereotypes.append(Stereotype(kw, child.argument, pos, origin))
        elif kw in CONSTRAINT_KEYWORDS:
            element.constraints.append(Facet(body, pos, origin))
        elif isinstance(element, UmlAttribute) and kw == "type" and \
                element.type_source is None:
            element.type_source = Facet(body, pos, origin)
        elif isinstance(element, UmlAttribute) and kw == "default" and \
                element.default_source is None:
            element.default_source = Facet(body, pos, origin)
            element.default = child.argument
        else:
            element.comments.append(Facet(body, pos, origin))

    # -- scopes and lookups ----------------------------------------------
    def declare(self, stmt: YangStatement, path: str, scope: _Scope) -> None:
        for child, cpath in zip(stmt.children, child_paths(path, stmt)):
            if child.keyword == "typedef":
                scope.typedefs.setdefault(child.argument, cpath)
            elif child.keyword == "grouping":
                scope.groupings.setdefault(child.argument, cpath)

    def split_ref(self, ref: str) -> tuple[Optional[str], str]:
        """Return (imported module or None for local, local name)."""
        if ":" in ref:
            prefix, name = ref.split(":", 1)
            if prefix == self.root_info.prefix:
                return None, name
            return self.root_info.imports.get(prefix, prefix), name
        return None, ref

    def stub(self, module: str, name: str, as_class: bool) -> str:
        pkg = self.import_package(module)
        stub_name = sanitize(name)
        existing = pkg.find(stub_name)
        if existing is None:
            if as_class:
                existing = UmlClass(name=stub_name, derived=True)
            else:
                existing = UmlDatatype(name=stub_name, kind=DatatypeKind.EXTERNAL,
                                       derived=True)
            pkg.classifiers.append(existing)
        return f"{pkg.name}::{stub_name}"

    def import_package(self, module: str) -> UmlPackage:
        name = sanitize(module)
        pkg = self.model.package(name)
        if pkg is None:
            pkg = UmlPackage(name, kind="import")
            self.model.packages.append(pkg)
        return pkg

    # -- type handling ----------------------------------------------------
    def type_display(self, type_stmt: Optional[YangStatement], owner_path: str,
                     attr: UmlAttribute, scope: _Scope, label: str,
                     data_path: Optional[tuple]) -> None:
        if type_stmt is None:
            return
        ref = type_stmt.argument or ""
        if ref in PRIMITIVES:
            attr.type = ref
            if ref == "identityref":
                for base in type_stmt.find_all("base"):
                    target = self.identity_target(base.argument or "")
                    if target is not None:
                        self.links.append((owner_path, target,
                                           AssociationKind.REFERENCE, label,
                                           owner_path))
            elif ref == "leafref":
                path_arg = type_stmt.arg_of("path")
                target = self.resolve_leafref(path_arg, data_path)
                if target is not None:
                    self.links.append((owner_path, target,
                                       AssociationKind.REFERENCE, label,
                                       owner_path))
            elif ref == "union":
                for member in type_stmt.find_all("type"):
                    if member.argument not in PRIMITIVES:
                        self.type_display(member, owner_path, UmlAttribute(),
                                          scope, label, data_path)
            return
        module, name = self.split_ref(ref)
        if module is None:
            target = scope.find("typedefs", name)
            if target is None:
                attr.type = ref
                return
            self.fixups.append((attr, target, "type"))
            self.links.append((owner_path, target, AssociationKind.REFERENCE,
                               label, owner_path))
        else:
            qname = self.stub(module, name, as_class=False)
            attr.type = qname.split("::", 1)[1]
            self.links.append((owner_path, qname, AssociationKind.REFERENCE,
                               label, owner_path))

    def identity_target(self, ref: str) -> Optional[str]:
        module, name = self.split_ref(ref)
        if module is None:
            return self.identities.get(name)
        return self.stub(module, name, as_class=True)

    def resolve_leafref(self, path_arg: Optional[str],
                        data_path: Optional[tuple]) -> Optional[str]:
        if not path_arg:
            return None
        steps = []
        for raw in path_arg.replace(" ", "").split("/"):
            if not raw:
                continue
            raw = raw.split("[", 1)[0]
            steps.append(raw if raw in ("..", ".") else local_name(raw))
        if path_arg.strip().startswith("/"):
            here: tuple = ()
        else:
            if data_path is None:
                return None
            here = data_path
        for step in steps:
            if step == "..":
                if not here:
                    return None
                here = here[:-1]
            elif step != ".":
                here = here + (step,)
        return self.data_index.get(here)

    def index_data(self, stmt: YangStatement, path: str, data: tuple) -> None:
        """Index instantiable data nodes by their data-tree path."""
        for child, cpath in zip(stmt.children, child_paths(path, stmt)):
            kw = child.keyword
            if kw in ("choice", "case"):
                self.index_data(child, cpath, data)
            elif kw in ("container", "list", "leaf", "leaf-list", "anyxml",
                        "anydata", "notification"):
                here = data + (child.argument,)
                self.data_index.setdefault(here, cpath)
                self.index_data(child, cpath, here)
            elif kw in ("rpc", "action"):
                here = data + (child.argument,)
                self.index_data(child, cpath, here)
            elif kw in ("input", "output"):
                self.index_data(child, cpath, data)

    # -- traversal --------------------------------------------------------
    def run(self) -> None:
        for root in self.roots:
            self.index_data(root, segment(root), ())
            self.declare(root, segment(root), self.global_scope)
            for child, cpath in zip(root.children, child_paths(segment(root), root)):
                if child.keyword == "identity":
                    self.identities.setdefault(child.argument, cpath)
        for i, root in enumerate(self.roots):
            self.root_info = _RootInfo(root)
            self.map_root(root, i == 0)
        self.resolve()

    def map_root(self, root: YangStatement, is_main: bool) -> None:
        rpath = segment(root)
        entry = self.entries[rpath]
        if is_main:
            self.package = UmlPackage(entry.uml_name)
            self.model.packages.insert(0, self.package)
            self.model.name = entry.uml_name
            owner = UmlClass(name="PuK", stereotypes=[Stereotype("puk")],
                             derived=True)
            self.add_classifier(owner)
            qname = self.register(rpath, owner)
            sink_element = self.package
        else:
            members = any(c.keyword in ROOT_MEMBER_KEYWORDS for c in root.children)
            if members:
                owner = UmlClass(name=entry.uml_name,
                                 stereotypes=[Stereotype("submodule")])
                self.add_classifier(owner)
                qname = self.register(rpath, owner)
                sink_element = owner
            else:
                owner, qname, sink_element = None, "", None
                echo = ReducedNode(rpath, "", root.keyword, root.argument, 0,
                                   root.argument or "")
                self.profile.reductions.append(echo)
        ctx = _Ctx(rpath, owner, qname) if owner is not None else None
        for imp in root.find_all("import"):
            self.import_package(imp.argument or "")

        def sink(child, pos):
            if sink_element is None:
                echo.facets.append(Facet(facet_text(child), pos))
            else:
                self.attach(sink_element, child, pos)

        self.map_body(root, rpath, ctx, sink, self.global_scope, ())

    def map_body(self, stmt: YangStatement, path: str, ctx: Optional[_Ctx],
                 sink: Callable, scope: _Scope, data_path: tuple) -> None:
        if stmt.keyword not in ("module", "submodule"):
            scope = _Scope(scope)
            self.declare(stmt, path, scope)
        for pos, (child, cpath) in enumerate(zip(stmt.children,
                                                 child_paths(path, stmt))):
            self.stmt_of[cpath] = child
            self.parent_of[cpath] = path
            if is_named_child(child, stmt):
                self.map_named(child, cpath, pos, stmt, ctx, scope, data_path)
            else:
                sink(child, pos)

    def element_sink(self, element) -> Callable:
        return lambda child, pos: self.attach(element, child, pos)

    def map_named(self, stmt: YangStatement, path: str, pos: int,
                  parent: YangStatement, ctx: Optional[_Ctx], scope: _Scope,
                  data_path: tuple) -> None:
        kw = stmt.keyword
        if ctx is None:
            ctx = _Ctx(self.parent_of[path], None, "", contains=False)
        if kw in SHORTHAND_CASE_KEYWORDS and parent.keyword == "choice":
            ctx = self.implicit_case(stmt, path, pos, ctx)
        if kw in ATTRIBUTE_KEYWORDS:
            self.map_attribute(stmt, path, pos, ctx, scope, data_path)
        elif kw in METHOD_KEYWORDS:
            self.map_method(stmt, path, pos, ctx, scope, data_path)
        elif kw in ("container", "list", "notification", "grouping"):
            self.map_composite(stmt, path, pos, ctx, scope, data_path)
        elif kw == "choice":
            self.map_choice(stmt, path, pos, ctx, scope, data_path)
        elif kw == "case":
            self.map_case(stmt, path, pos, ctx, scope, data_path)
        elif kw == "typedef":
            self.map_typedef(stmt, path, pos, scope)
        elif kw in ("identity", "extension", "augment"):
            self.map_simple_class(stmt, path, pos, scope, data_path)
        elif kw in ("input", "output"):
            raise AssertionError("handled by map_method")

    def implicit_case(self, stmt, path, pos, ctx: _Ctx) -> _Ctx:
        case_path = f"{self.parent_of[path]}/case:{stmt.argument}"
        name = self.name_of(case_path)
        cls = UmlClass(name=name, stereotypes=[Stereotype("case", "implicit")],
                       position=pos)
        self.add_classifier(cls)
        qname = self.register(case_path, cls)
        self.links.append((case_path, ctx.path, AssociationKind.GENERALIZATION,
                           None, case_path))
        return _Ctx(case_path, cls, qname)

    def map_attribute(self, stmt, path, pos, ctx: _Ctx, scope, data_path) -> None:
        kw = stmt.keyword
        attr = UmlAttribute(name=self.name_of(path), position=pos)
        if kw == "leaf-list":
            attr.cardinality = Cardinality.ZERO_TO_MANY
        if kw in ("anyxml", "anydata"):
            attr.type = kw
            attr.stereotypes.append(Stereotype("anyxml", None if kw == "anyxml"
                                               else "anydata"))
            attr.comments.append(Facet(ANYXML_COMMENT))
        elif kw == "feature":
            attr.type = "boolean"
        elif kw == "uses":
            module, name = self.split_ref(stmt.argument or "")
            if module is None:
                target = scope.find("groupings", name)
                if target is None:
                    raise TransformError([Diagnostic(
                        Severity.ERROR, f"dangling uses target {stmt.argument}"
                        f" at {path}", rule="mapping")])
                self.fixups.append((attr, target, "type"))
            else:
                target = self.stub(module, name, as_class=True)
                attr.type = target.split("::", 1)[1]
            self.links.append((ctx.path, target, AssociationKind.REFERENCE,
                               attr.name, path))
        for cpos, child in enumerate(stmt.children):
            self.attach(attr, child, cpos)
        if kw in ("leaf", "leaf-list"):
            here = _extend(data_path, stmt.argument)
            self.type_display(stmt.find("type"), ctx.path, attr, scope,
                              attr.name, here)
        self.member_list(ctx.element).append(attr)

    @staticmethod
    def member_list(element) -> list:
        return element.attributes

    def map_method(self, stmt, path, pos, ctx: _Ctx, scope, data_path) -> None:
        method = UmlMethod(name=self.name_of(path), position=pos)
        ctx.element.methods.append(method)
        mscope = _Scope(scope)
        self.declare(stmt, path, mscope)
        here = _extend(data_path, stmt.argument)
        for cpos, (child, cpath) in enumerate(zip(stmt.children,
                                                  child_paths(path, stmt))):
            self.stmt_of[cpath] = child
            self.parent_of[cpath] = path
            if child.keyword in ("input", "output"):
                dt = UmlDatatype(name=self.name_of(cpath), position=cpos)
                self.add_classifier(dt)
                qname = self.register(cpath, dt)
                self.contain(ctx, cpath, dt, False)
                if child.keyword == "input":
                    method.parameters.append(UmlParameter("in", dt.name))
                else:
                    method.return_type = dt.name
                self.map_body(child, cpath, _Ctx(cpath, dt, qname),
                              self.element_sink(dt), mscope, here)
            elif is_named_child(child, stmt):
                self.map_named(child, cpath, cpos, stmt, ctx, mscope, here)
            else:
                self.attach(method, child, cpos)

    def map_composite(self, stmt, path, pos, ctx: _Ctx, scope, data_path) -> None:
        kw = stmt.keyword
        final = self.final.get(path)
        here = _extend(data_path, stmt.argument) if kw != "grouping" else None
        if final is C.PREFIX:
            echo = ReducedNode(path, self.parent_of[path], kw, stmt.argument,
                               pos, self.root_info.root.argument or "")
            self.profile.reductions.append(echo)
            pending: list[tuple[YangStatement, int]] = []
            before = len(self.data_objects)
            inner = ctx if kw != "grouping" else _Ctx(
                ctx.path, ctx.element, ctx.qname, contains=False)
            self.map_body(stmt, path, inner,
                          lambda c, p: pending.append((c, p)), scope, here)
            lifted = [p for p in self.data_objects[before:]
                      if p.startswith(path + "/")]
            if lifted:
                target = self.element_at(lifted[0])
                for child, cpos in pending:
                    self.attach(target, child, cpos, origin=path)
            else:
                echo.facets.extend(Facet(facet_text(c), p) for c, p in pending)
            return
        name = self.name_of(path)
        origin = Stereotype(kw)
        if final is C.COMPLEX_DATATYPE:
            element = UmlDatatype(name=name, stereotypes=[origin], position=pos)
        elif final is C.CLASS:
            element = UmlClass(name=name, stereotypes=[origin], position=pos)
            point = self.points.get(path)
            if point is not None and point.kind is DecisionKind.CONTAINER_EMPTY:
                element.comments.append(Facet(KEPT_COMMENT))
        else:
            raise TransformError([Diagnostic(
                Severity.ERROR, f"unresolved classification {final} at {path}",
                rule="mapping")])
        self.add_classifier(element)
        is_data = kw != "grouping"
        qname = self.register(path, element, data_object=is_data)
        if is_data:
            self.contain(ctx, path, element, kw == "list")
        self.map_body(stmt, path, _Ctx(path, element, qname),
                      self.element_sink(element), scope, here)
        if kw == "list":
            self.mark_keys(stmt, path, element)

    def element_at(self, path: str):
        qname = self.model.element_of[path]
        return self.model.resolve(qname)

    def contain(self, ctx: _Ctx, path: str, element, many: bool) -> None:
        if not ctx.contains or ctx.element is None:
            return
        part = UmlAttribute(name=element.name, type=element.name, derived=True,
                            cardinality=Cardinality.ZERO_TO_MANY if many
                            else Cardinality.ONE)
        self.member_list(ctx.element).append(part)
        self.links.append((ctx.path, path, AssociationKind.COMPOSITION, None,
                           path))

    def mark_keys(self, stmt, path, element) -> None:
        key = stmt.arg_of("key")
        if not key:
            return
        for name in key.split():
            entry = self.entries.get(f"{path}/leaf:{local_name(name)}")
            if entry is None:
                continue
            for attr in element.attributes:
                if attr.name == entry.uml_name and not attr.derived:
                    attr.stereotypes.append(Stereotype("key"))

    def map_choice(self, stmt, path, pos, ctx: _Ctx, scope, data_path) -> None:
        cls = UmlClass(name=self.name_of(path), stereotypes=[Stereotype("choice")],
                       position=pos)
        self.add_classifier(cls)
        qname = self.register(path, cls, data_object=True)
        self.contain(ctx, path, cls, False)
        self.map_body(stmt, path, _Ctx(path, cls, qname), self.element_sink(cls),
                      scope, data_path)

    def map_case(self, stmt, path, pos, ctx: _Ctx, scope, data_path) -> None:
        cls = UmlClass(name=self.name_of(path), stereotypes=[Stereotype("case")],
                       position=pos, generalization_of=ctx.element.name)
        self.add_classifier(cls)
        qname = self.register(path, cls, data_object=True)
        self.links.append((path, ctx.path, AssociationKind.GENERALIZATION, None,
                           path))
        self.map_body(stmt, path, _Ctx(path, cls, qname), self.element_sink(cls),
                      scope, data_path)

    def map_typedef(self, stmt, path, pos, scope) -> None:
        type_stmt = stmt.find("type")
        is_enum = type_stmt is not None and type_stmt.argument == "enumeration"
        dt = UmlDatatype(name=self.name_of(path), position=pos,
                         kind=DatatypeKind.ENUMERATION if is_enum
                         else DatatypeKind.ALIAS)
        if is_enum:
            dt.literals = [e.argument for e in type_stmt.find_all("enum")]
        value = UmlAttribute(name="value", derived=True)
        dt.attributes.append(value)
        self.add_classifier(dt)
        self.register(path, dt)
        for cpos, child in enumerate(stmt.children):
            if child.keyword in ("type", "default"):
                self.attach(value, child, cpos)
            else:
                self.attach(dt, child, cpos)
        self.type_display(type_stmt, path, value, scope, "value", None)

    def map_simple_class(self, stmt, path, pos, scope, data_path) -> None:
        kw = stmt.keyword
        cls = UmlClass(name=self.name_of(path), stereotypes=[Stereotype(kw)],
                       position=pos)
        self.add_classifier(cls)
        qname = self.register(path, cls)
        if kw == "identity":
            for base in stmt.find_all("base"):
                target = self.identity_target(base.argument or "")
                if target is not None:
                    self.links.append((path, target,
                                       AssociationKind.GENERALIZATION,
                                       base.argument, path))
        if kw == "augment":
            self.map_body(stmt, path, _Ctx(path, cls, qname),
                          self.element_sink(cls), scope, None)
        else:
            for cpos, child in enumerate(stmt.children):
                self.attach(cls, child, cpos)

    # -- resolution -------------------------------------------------------
    def representative(self, ref: str) -> Optional[str]:
        """Qualified element standing for a path (or a qualified name)."""
        if "::" in ref:
            return ref
        if ref in self.model.element_of:
            return self.model.element_of[ref]
        for p in self.order:
            if p.startswith(ref + "/"):
                return self.model.element_of[p]
        return None

    def owner_element(self, path: str) -> Optional[str]:
        while path is not None:
            if path in self.model.element_of:
                return self.model.element_of[path]
            path = self.parent_of.get(path)
        return None

    def resolve(self) -> None:
        for attr, target, _ in self.fixups:
            qname = self.representative(target)
            if qname is None:
                raise TransformError([Diagnostic(
                    Severity.ERROR, f"dangling association to {target}",
                    rule="association")])
            attr.type = qname.split("::", 1)[1]
        for src, dst, kind, label, where in self.links:
            s = self.representative(src)
            stmt = self.stmt_of.get(dst)
            if stmt is not None and stmt.keyword in ("leaf", "leaf-list"):
                d = self.owner_element(dst)
            else:
                d = self.representative(dst)
            add_association(self.model, AssociationTemplate(
                s or src, d or dst, kind, label, where))


def transform(module: YangModule, records: Iterable[DecisionRecord] = (),
              policy: Policy = Policy.REQUIRE_EXPLICIT,
              includes: Sequence[YangModule] = ()) -> tuple[UmlModel, UmlProfile]:
    """Map a module (plus optional included submodules) to UML.

    Every decision point must be covered by ``records`` unless ``policy``
    resolves it; the resolved records are echoed in the profile.
    """
    roots = [module.root] + [m.root for m in includes]
    final: dict = {}
    all_records: list[DecisionRecord] = []
    points: dict = {}
    records = list(records)
    for root in roots:
        result, resolved, fin = classify_and_resolve(root, records, policy)
        final.update(fin)
        all_records.extend(resolved)
        points.update({p.schema_path: p for p in result.points})
    root_owners = {}
    for root in roots[1:]:
        members = any(c.keyword in ROOT_MEMBER_KEYWORDS for c in root.children)
        if members:
            root_owners[segment(root)] = sanitize(root.argument or "")
    ledger = assign_names([r for r in roots], final, root_owners)
    model = UmlModel(name=sanitize(module.name), ledger=ledger)
    profile = UmlProfile(name=sanitize(module.name), decisions=all_records)
    mapper = _Mapper(roots, final, ledger, points, model, profile)
    mapper.run()
    finalize(model)
    return model, profile


def convert(module: YangModule, policy: Policy = Policy.PREFER_REDUCTION,
            records: Iterable[DecisionRecord] = (),
            includes: Sequence[YangModule] = ()) -> tuple[UmlModel, UmlProfile]:
    """Transform with a default policy for any open decision."""
    return transform(module, records, policy, includes)
