"""XMI-shaped XML for a UML model and its profile.

The model document holds packages, classifiers and associations. The
profile document holds the stereotype set, the primitive types, the
decision records, the reduced-node echoes and the name ledger. The model
points at the profile through ``profileApplication/@href``.
"""
from __future__ import annotations

import xml.etree.ElementTree as ET
from typing import Optional

from ..namespaces import NameLedger
from ..transform.decisions import DecisionRecord, Provenance
from ..transform.classify import Classification
from ..uml import (AssociationKind, Cardinality, DatatypeKind, Facet,
                   ReducedNode, Stereotype, UmlAssociation, UmlAttribute,
                   UmlClass, UmlDatatype, UmlError, UmlMethod, UmlModel,
                   UmlPackage, UmlParameter, UmlProfile, check_integrity)
from ..yang.ast import Diagnostic, Severity, YangError

XMI_NS = "http://www.omg.org/spec/XMI/20131001"
UML_NS = "http://www.eclipse.org/uml2/5.0.0/UML"
_XMI = f"{{{XMI_NS}}}"

ET.register_namespace("xmi", XMI_NS)
ET.register_namespace("uml", UML_NS)


class XmiError(YangError):
    pass


def _fail(message: str) -> None:
    raise XmiError([Diagnostic(Severity.ERROR, message, rule="xmi")])


def profile_href(model_name: str) -> str:
    return f"{model_name}.profile.xml"


# -- writing ---------------------------------------------------------------

def _set(elem: ET.Element, key: str, value) -> None:
    if value is None:
        return
    if isinstance(value, bool):
        value = "true" if value else "false"
    elem.set(key, str(value))


def _facet(parent: ET.Element, tag: str, facet: Optional[Facet]) -> None:
    if facet is None:
        return
    e = ET.SubElement(parent, tag)
    e.set("body", facet.body)
    _set(e, "position", facet.position)
    _set(e, "origin", facet.origin)


def _annotations(parent: ET.Element, element) -> None:
    for s in element.stereotypes:
        e = ET.SubElement(parent, "appliedStereotype")
        e.set("tag", s.tag)
        _set(e, "value", s.value)
        _set(e, "position", s.position)
        _set(e, "origin", s.origin)
    for f in element.constraints:
        _facet(parent, "ownedRule", f)
    for f in element.comments:
        _facet(parent, "ownedComment", f)


def _attribute(parent: ET.Element, attr: UmlAttribute) -> None:
    e = ET.SubElement(parent, "ownedAttribute")
    e.set("name", attr.name)
    e.set("type", attr.type)
    e.set("multiplicity", attr.cardinality.value)
    _set(e, "default", attr.default)
    _set(e, "position", attr.position)
    _set(e, "derived", attr.derived)
    _annotations(e, attr)
    _facet(e, "typeSource", attr.type_source)
    _facet(e, "defaultSource", attr.default_source)


def _method(parent: ET.Element, method: UmlMethod) -> None:
    e = ET.SubElement(parent, "ownedOperation")
    e.set("name", method.name)
    _set(e, "returnType", method.return_type)
    _set(e, "position", method.position)
    _annotations(e, method)
    for p in method.parameters:
        pe = ET.SubElement(e, "ownedParameter")
        pe.set("name", p.name)
        pe.set("type", p.type)


_DATATYPE_XMI = {DatatypeKind.ENUMERATION: "uml:Enumeration",
                 DatatypeKind.EXTERNAL: "uml:PrimitiveType"}


def _classifier(parent: ET.Element, pkg: UmlPackage, c) -> None:
    e = ET.SubElement(parent, "packagedElement")
    if isinstance(c, UmlClass):
        e.set(_XMI + "type", "uml:Class")
    else:
        e.set(_XMI + "type", _DATATYPE_XMI.get(c.kind, "uml:DataType"))
        e.set("kind", c.kind.value)
    e.set(_XMI + "id", f"{pkg.name}::{c.name}")
    e.set("name", c.name)
    _set(e, "position", c.position)
    _set(e, "derived", c.derived)
    if isinstance(c, UmlClass):
        _set(e, "generalizationOf", c.generalization_of)
    _annotations(e, c)
    for a in c.attributes:
        _attribute(e, a)
    if isinstance(c, UmlClass):
        for m in c.methods:
            _method(e, m)
    else:
        for lit in c.literals:
            ET.SubElement(e, "ownedLiteral").set("name", lit)


def _document(root: ET.Element) -> str:
    ET.indent(root, space="  ")
    return ET.tostring(root, encoding="unicode", xml_declaration=True) + "\n"


def _xmi_root() -> ET.Element:
    root = ET.Element(_XMI + "XMI")
    root.set(_XMI + "version", "2.5")
    return root


def emit_model_xml(model: UmlModel) -> str:
    root = _xmi_root()
    m = ET.SubElement(root, f"{{{UML_NS}}}Model")
    m.set(_XMI + "id", "model")
    m.set("name", model.name)
    ET.SubElement(m, "profileApplication").set("href", profile_href(model.name))
    for pkg in model.packages:
        pe = ET.SubElement(m, "packagedElement")
        pe.set(_XMI + "type", "uml:Package")
        pe.set(_XMI + "id", pkg.name)
        pe.set("name", pkg.name)
        pe.set("kind", pkg.kind)
        for f in pkg.comments:
            _facet(pe, "ownedComment", f)
        for c in pkg.classifiers:
            _classifier(pe, pkg, c)
    for a in model.associations:
        ae = ET.SubElement(m, "packagedElement")
        ae.set(_XMI + "type", "uml:Association")
        ae.set("kind", a.kind.value)
        ae.set("source", a.source)
        ae.set("target", a.target)
        _set(ae, "label", a.label)
    return _document(root)


def emit_profile_xml(model: UmlModel, profile: UmlProfile) -> str:
    root = _xmi_root()
    p = ET.SubElement(root, f"{{{UML_NS}}}Profile")
    p.set(_XMI + "id", "profile")
    p.set("name", profile.name)
    p.set("model", model.name)
    for tag in profile.stereotypes:
        ET.SubElement(p, "ownedStereotype").set("name", tag)
    for prim in profile.primitives:
        ET.SubElement(p, "ownedPrimitive").set("name", prim)
    for d in profile.decisions:
        de = ET.SubElement(p, "decision")
        de.set("path", d.schema_path)
        de.set("choice", d.choice.value)
        de.set("provenance", d.provenance.value)
    for r in profile.reductions:
        re_ = ET.SubElement(p, "reduction")
        re_.set("path", r.path)
        re_.set("parent", r.parent_path)
        re_.set("keyword", r.keyword)
        _set(re_, "argument", r.argument)
        re_.set("position", str(r.position))
        re_.set("root", r.root)
        for f in r.facets:
            _facet(re_, "facet", f)
    ET.SubElement(p, "ledger").text = model.ledger.to_json()
    return _document(root)


def emit_xmi(model: UmlModel, profile: UmlProfile) -> tuple[str, str]:
    """Serialize to ``(model_xml, profile_xml)``."""
    return emit_model_xml(model), emit_profile_xml(model, profile)


# -- reading ---------------------------------------------------------------

def _int(e: ET.Element, key: str) -> Optional[int]:
    v = e.get(key)
    if v is None:
        return None
    try:
        return int(v)
    except ValueError:
        _fail(f"{e.tag}/@{key} is not an integer: {v!r}")


def _bool(e: ET.Element, key: str) -> bool:
    return e.get(key) == "true"


def _required(e: ET.Element, key: str) -> str:
    v = e.get(key)
    if v is None:
        _fail(f"{e.tag} lacks required attribute {key}")
    return v


def _read_facet(e: Optional[ET.Element]) -> Optional[Facet]:
    if e is None:
        return None
    return Facet(_required(e, "body"), _int(e, "position"), e.get("origin"))


class _Reader:
    def __init__(self, tags: set[str]):
        self.tags = tags

    def annotations(self, e: ET.Element, target) -> None:
        for s in e.findall("appliedStereotype"):
            tag = _required(s, "tag")
            if tag not in self.tags:
                _fail(f"stereotype {tag!r} is not declared by the profile")
            target.stereotypes.append(Stereotype(tag, s.get("value"),
                                                 _int(s, "position"),
                                                 s.get("origin")))
        target.constraints.extend(_read_facet(f) for f in e.findall("ownedRule"))
        target.comments.extend(_read_facet(f) for f in e.findall("ownedComment"))

    def attribute(self, e: ET.Element) -> UmlAttribute:
        try:
            card = Cardinality(_required(e, "multiplicity"))
        except ValueError:
            _fail(f"bad multiplicity {e.get('multiplicity')!r}")
        a = UmlAttribute(name=_required(e, "name"), type=_required(e, "type"),
                         cardinality=card, default=e.get("default"),
                         type_source=_read_facet(e.find("typeSource")),
                         default_source=_read_facet(e.find("defaultSource")),
                         position=_int(e, "position"), derived=_bool(e, "derived"))
        self.annotations(e, a)
        return a

    def method(self, e: ET.Element) -> UmlMethod:
        m = UmlMethod(name=_required(e, "name"), return_type=e.get("returnType"),
                      position=_int(e, "position"))
        self.annotations(e, m)
        m.parameters = [UmlParameter(_required(p, "name"), _required(p, "type"))
                        for p in e.findall("ownedParameter")]
        return m

    def classifier(self, e: ET.Element):
        xtype = e.get(_XMI + "type")
        common = dict(name=_required(e, "name"), position=_int(e, "position"),
                      derived=_bool(e, "derived"))
        if xtype == "uml:Class":
            c = UmlClass(generalization_of=e.get("generalizationOf"), **common)
        elif xtype in ("uml:DataType", "uml:Enumeration", "uml:PrimitiveType"):
            try:
                kind = DatatypeKind(_required(e, "kind"))
            except ValueError:
                _fail(f"unknown datatype kind {e.get('kind')!r}")
            c = UmlDatatype(kind=kind, **common)
            c.literals = [_required(l, "name") for l in e.findall("ownedLiteral")]
        else:
            _fail(f"unsupported classifier type {xtype!r}")
        self.annotations(e, c)
        c.attributes = [self.attribute(a) for a in e.findall("ownedAttribute")]
        if isinstance(c, UmlClass):
            c.methods = [self.method(m) for m in e.findall("ownedOperation")]
        return c


def _parse(text: str, what: str) -> ET.Element:
    try:
        return ET.fromstring(text)
    except ET.ParseError as exc:
        _fail(f"{what} document is not well-formed XML: {exc}")


def _single(root: ET.Element, tag: str, what: str) -> ET.Element:
    e = root.find(tag)
    if root.tag != _XMI + "XMI" or e is None:
        _fail(f"{what} document lacks {tag}")
    return e


def import_xmi(model_xml: str, profile_xml: Optional[str]) -> tuple[UmlModel, UmlProfile]:
    """Read back documents written by ``emit_xmi``."""
    mroot = _single(_parse(model_xml, "model"), f"{{{UML_NS}}}Model", "model")
    app = mroot.find("profileApplication")
    if app is None or not app.get("href"):
        _fail("model document does not reference a profile")
    if not profile_xml:
        _fail(f"missing profile document {app.get('href')}")
    proot = _single(_parse(profile_xml, "profile"), f"{{{UML_NS}}}Profile",
                    "profile")
    model_name = _required(mroot, "name")
    if proot.get("model") != model_name or app.get("href") != profile_href(model_name):
        _fail(f"profile does not belong to model {model_name}")

    tags = [_required(s, "name") for s in proot.findall("ownedStereotype")]
    try:
        for tag in tags:
            Stereotype(tag)
    except UmlError as exc:
        raise XmiError(exc.diagnostics) from None
    profile = UmlProfile(_required(proot, "name"), stereotypes=tags,
                         primitives=[_required(p, "name")
                                     for p in proot.findall("ownedPrimitive")])
    try:
        for d in proot.findall("decision"):
            profile.decisions.append(DecisionRecord(
                _required(d, "path"), Classification(_required(d, "choice")),
                Provenance(_required(d, "provenance"))))
    except ValueError as exc:
        _fail(f"bad decision record: {exc}")
    for r in proot.findall("reduction"):
        pos = _int(r, "position")
        if pos is None:
            _fail("reduction lacks a position")
        profile.reductions.append(ReducedNode(
            _required(r, "path"), _required(r, "parent"), _required(r, "keyword"),
            r.get("argument"), pos, _required(r, "root"),
            [_read_facet(f) for f in r.findall("facet")]))
    ledger_elem = proot.find("ledger")
    if ledger_elem is None:
        _fail("profile lacks the name ledger")
    try:
        ledger = NameLedger.from_json(ledger_elem.text or "[]")
    except (ValueError, KeyError, TypeError) as exc:
        _fail(f"unreadable name ledger: {exc}")

    reader = _Reader(set(tags))
    model = UmlModel(model_name, ledger=ledger)
    for pe in mroot.findall("packagedElement"):
        xtype = pe.get(_XMI + "type")
        if xtype == "uml:Package":
            pkg = UmlPackage(_required(pe, "name"), kind=pe.get("kind", "main"))
            pkg.comments = [_read_facet(f) for f in pe.findall("ownedComment")]
            pkg.classifiers = [reader.classifier(c)
                               for c in pe.findall("packagedElement")]
            model.packages.append(pkg)
        elif xtype == "uml:Association":
            try:
                kind = AssociationKind(_required(pe, "kind"))
            except ValueError:
                _fail(f"unknown association kind {pe.get('kind')!r}")
            model.associations.append(UmlAssociation(
                _required(pe, "source"), _required(pe, "target"), kind,
                pe.get("label")))
        else:
            _fail(f"unsupported packaged element {xtype!r}")
    try:
        check_integrity(model)
    except UmlError as exc:
        raise XmiError(exc.diagnostics) from None
    return model, profile
