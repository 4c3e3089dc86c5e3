"""PlantUML class-diagram rendering of a UML model."""
from __future__ import annotations

import re
from collections import Counter

from ..uml import (AssociationKind, Cardinality, DatatypeKind, UmlClass,
                   UmlModel)

ARROWS = {AssociationKind.COMPOSITION: "*--",
          AssociationKind.REFERENCE: "-->",
          AssociationKind.GENERALIZATION: "<|--"}

_PLAIN = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")


def _aliases(model: UmlModel) -> dict[str, str]:
    counts = Counter(c.name for _, c in model.classifiers())
    out = {}
    for pkg, c in model.classifiers():
        if counts[c.name] == 1 and _PLAIN.match(c.name):
            out[f"{pkg.name}::{c.name}"] = c.name
        else:
            out[f"{pkg.name}::{c.name}"] = re.sub(r"\W", "_", f"{pkg.name}__{c.name}")
    return out


def _declaration(alias: str, c) -> str:
    labels = " ".join(f"<<{s.label()}>>" for s in c.stereotypes)
    if isinstance(c, UmlClass):
        head = "class"
    elif c.kind is DatatypeKind.ENUMERATION:
        head = "enum"
    else:
        head = "class"
        labels = (labels + " <<datatype>>").strip()
    name = c.name if alias == c.name else f'"{c.name}" as {alias}'
    return f"{head} {name}" + (f" {labels}" if labels else "")


def _member_lines(c) -> list[str]:
    lines = []
    for lit in getattr(c, "literals", []):
        lines.append(lit)
    for a in c.attributes:
        mult = " [0..*]" if a.cardinality is Cardinality.ZERO_TO_MANY else ""
        marks = "".join(f" <<{s.label()}>>" for s in a.stereotypes)
        default = f" = {a.default}" if a.default is not None else ""
        prefix = "/" if a.derived else ""
        lines.append(f"+{prefix}{a.name} : {a.type}{mult}{default}{marks}")
    for m in getattr(c, "methods", []):
        params = ", ".join(f"{p.name} : {p.type}" for p in m.parameters)
        ret = f" : {m.return_type}" if m.return_type else ""
        lines.append(f"+{m.name}({params}){ret}")
    return lines


def emit_plantuml(model: UmlModel) -> str:
    """One class diagram, packages as blocks, in document order."""
    aliases = _aliases(model)
    out = ["@startuml", f"title {model.name}", ""]
    for pkg in model.packages:
        out.append(f'package "{pkg.name}" {{')
        for c in pkg.classifiers:
            decl = _declaration(aliases[f"{pkg.name}::{c.name}"], c)
            members = _member_lines(c)
            if members:
                out.append(f"  {decl} {{")
                out.extend(f"    {line}" for line in members)
                out.append("  }")
            else:
                out.append(f"  {decl}")
        out.append("}")
        out.append("")
    for a in model.associations:
        src, dst = aliases[a.source], aliases[a.target]
        if a.kind is AssociationKind.GENERALIZATION:
            src, dst = dst, src  # parent on the left: Parent <|-- Child
        label = f" : {a.label}" if a.label else ""
        out.append(f"{src} {ARROWS[a.kind]} {dst}{label}")
    out.append("@enduml")
    return "\n".join(out) + "\n"
