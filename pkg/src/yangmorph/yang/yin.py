"""YIN (XML) encoding and decoding of YANG ASTs."""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Optional
from xml.parsers import expat
from xml.sax.saxutils import escape, quoteattr

from .ast import (Diagnostic, Severity, SourceKind, YangError, YangModule,
                  YangStatement)
from .grammar import YIN_ARGUMENTS, KNOWN_KEYWORDS

YIN_NS = "urn:ietf:params:xml:ns:yang:yin:1"
PLACEHOLDER_NS = "urn:yangmorph:module:"


class YinError(YangError):
    pass


def _text(value: str) -> str:
    return escape(value).replace("\r", "&#13;")


def _local_extensions(root: YangStatement) -> dict[str, tuple[Optional[str], bool]]:
    """Map local extension names to (argument name, yin-element)."""
    table = {}
    for ext in root.find_all("extension"):
        arg = ext.find("argument")
        if arg is None:
            table[ext.argument] = (None, False)
        else:
            table[ext.argument] = (arg.argument,
                                   arg.arg_of("yin-element") == "true")
    return table


class _ArgumentMap:
    def __init__(self, root: YangStatement, own_prefix: Optional[str]):
        self.own_prefix = own_prefix
        self.local = _local_extensions(root)

    def lookup(self, keyword: str) -> tuple[Optional[str], bool]:
        if ":" in keyword:
            prefix, name = keyword.split(":", 1)
            if prefix == self.own_prefix and name in self.local:
                return self.local[name]
            return ("name", False)
        return YIN_ARGUMENTS.get(keyword, ("name", False))


_NCNAME = re.compile(r"^[A-Za-z_][A-Za-z0-9._-]*$")


def _namespace_decls(module: YangModule) -> list[tuple[str, str]]:
    root = module.root
    decls = []
    seen = set()
    own = module.prefix
    if own:
        uri = root.arg_of("namespace")
        if uri is None:
            target = module.name
            if module.is_submodule:
                target = root.find("belongs-to").argument or target
            uri = PLACEHOLDER_NS + target
        decls.append((own, uri))
        seen.add(own)
    for imp in root.find_all("import"):
        p = imp.arg_of("prefix")
        if p and p not in seen:
            decls.append((p, PLACEHOLDER_NS + (imp.argument or p)))
            seen.add(p)
    # extension prefixes that are not declared anywhere still need a binding
    for stmt in root.walk():
        if stmt.is_extension and stmt.prefix not in seen:
            decls.append((stmt.prefix, PLACEHOLDER_NS + stmt.prefix))
            seen.add(stmt.prefix)
    # an invalid prefix argument cannot be bound; the prefix statement
    # itself is still written out as an ordinary element
    return [(p, uri) for p, uri in decls
            if _NCNAME.match(p) and not p.lower().startswith("xml")]


def _element(stmt: YangStatement, args: _ArgumentMap, level: int,
             out: list[str], root_attrs: str = "") -> None:
    ind = "  " * level
    tag = stmt.keyword
    arg_name, as_elem = args.lookup(tag)
    attrs = ""
    body: list[str] = []
    if stmt.argument is not None:
        if as_elem and arg_name:
            qual = f"{stmt.prefix}:{arg_name}" if stmt.is_extension else arg_name
            body.append(f"{ind}  <{qual}>{_text(stmt.argument)}</{qual}>")
        else:
            attrs = f" {arg_name or 'name'}={quoteattr(stmt.argument)}"
    attrs += root_attrs
    if not body and not stmt.children:
        out.append(f"{ind}<{tag}{attrs}/>")
        return
    out.append(f"{ind}<{tag}{attrs}>")
    out.extend(body)
    for child in stmt.children:
        _element(child, args, level + 1, out)
    out.append(f"{ind}</{tag}>")


def to_yin(module: YangModule) -> str:
    """Encode a module as a pretty-printed YIN document."""
    root_attrs = f' xmlns="{YIN_NS}"' + "".join(
        f" xmlns:{p}={quoteattr(uri)}" for p, uri in _namespace_decls(module))
    out = ['<?xml version="1.0" encoding="UTF-8"?>']
    _element(module.root, _ArgumentMap(module.root, module.prefix), 0, out,
             root_attrs)
    return "\n".join(out) + "\n"


def yin_fragment(stmt: YangStatement, own_prefix: Optional[str] = None) -> str:
    """Compact single-line YIN for one statement, without namespace attributes."""
    out: list[str] = []
    _element(stmt, _ArgumentMap(stmt, own_prefix), 0, out)
    return "".join(line.strip() for line in out)


@dataclass
class _Frame:
    keyword: str
    qname: str
    argument: Optional[str]
    span: tuple[int, int]
    arg_elem: Optional[str] = None
    children: list = field(default_factory=list)
    text: Optional[list] = None  # collecting argument element text


class _Reader:
    def __init__(self, strict: bool):
        self.strict = strict
        self.stack: list[_Frame] = []
        self.ns_stack: list[dict[str, str]] = [{}]
        self.result: Optional[YangStatement] = None
        self.diags: list[Diagnostic] = []
        self.args: Optional[_ArgumentMap] = None
        self.parser = expat.ParserCreate()
        self.parser.buffer_text = True
        self.parser.StartElementHandler = self.start
        self.parser.EndElementHandler = self.end
        self.parser.CharacterDataHandler = self.chars
        self.parser.ordered_attributes = True

    def pos(self) -> tuple[int, int]:
        return (self.parser.CurrentLineNumber,
                self.parser.CurrentColumnNumber + 1)

    def fail(self, message: str, rule: str = "yin") -> None:
        self.diags.append(Diagnostic(Severity.ERROR, message, self.pos(), rule))
        raise _Stop()

    def keyword_of(self, qname: str) -> str:
        ns = self.ns_stack[-1]
        if ":" in qname:
            prefix, local = qname.split(":", 1)
            if ns.get(prefix) == YIN_NS:
                return local
            return qname
        if self.strict and ns.get("") not in (YIN_NS, None):
            self.fail(f"element {qname} is not in the YIN namespace")
        return qname

    def start(self, qname: str, attr_list: list) -> None:
        pairs = list(zip(attr_list[::2], attr_list[1::2]))
        ns = dict(self.ns_stack[-1])
        attrs = []
        for k, v in pairs:
            if k == "xmlns":
                ns[""] = v
            elif k.startswith("xmlns:"):
                ns[k[6:]] = v
            else:
                attrs.append((k, v))
        self.ns_stack.append(ns)
        parent = self.stack[-1] if self.stack else None
        if parent is not None and parent.arg_elem is not None and \
                qname == parent.arg_elem and parent.text is None and \
                parent.argument is None:
            parent.text = []
            self.stack.append(_Frame("", qname, None, self.pos()))
            self.stack[-1].text = parent.text
            return
        keyword = self.keyword_of(qname)
        if not self.stack:
            if keyword not in ("module", "submodule"):
                self.fail(f"root element must be module or submodule, "
                          f"not {qname}")
        if self.strict and ":" not in keyword and keyword not in KNOWN_KEYWORDS:
            self.fail(f"unknown element {qname}", "strict")
        if self.args is None:
            own = None
            self.args = _ArgumentMap(YangStatement(keyword), own)
        arg_name, as_elem = self.args.lookup(keyword)
        argument = None
        arg_elem = None
        if as_elem and arg_name:
            prefix = qname.split(":", 1)[0] + ":" if ":" in qname else ""
            arg_elem = prefix + arg_name
            if ":" in keyword:
                arg_elem = keyword.split(":", 1)[0] + ":" + arg_name
        if attrs:
            if ":" in keyword and not (as_elem and arg_name):
                if len(attrs) > 1 and arg_name is None:
                    self.fail(f"cannot determine argument of {qname}")
                chosen = dict(attrs).get(arg_name) if arg_name else None
                argument = chosen if chosen is not None else attrs[0][1]
            elif arg_name and not as_elem:
                values = dict(attrs)
                if arg_name in values:
                    argument = values[arg_name]
                elif self.strict:
                    self.fail(f"{qname} lacks attribute {arg_name}")
                elif len(attrs) == 1:
                    argument = attrs[0][1]
            elif self.strict:
                self.fail(f"unexpected attribute on {qname}")
        self.stack.append(_Frame(keyword, qname, argument, self.pos(),
                                 arg_elem))

    def end(self, qname: str) -> None:
        self.ns_stack.pop()
        frame = self.stack.pop()
        if frame.keyword == "" and frame.text is not None:
            parent = self.stack[-1]
            parent.argument = "".join(frame.text)
            parent.text = None
            parent.arg_elem = None
            return
        stmt = YangStatement(frame.keyword, frame.argument,
                             tuple(frame.children), frame.span)
        if self.stack:
            self.stack[-1].children.append(stmt)
            if len(self.stack) == 1:
                self._refresh_arguments()
        else:
            self.result = stmt

    def _refresh_arguments(self) -> None:
        # extension definitions and the prefix are top-level; rebuild lazily
        top = self.stack[0]
        root = YangStatement(top.keyword, top.argument, tuple(top.children))
        prefix = root.arg_of("prefix")
        if prefix is None:
            belongs = root.find("belongs-to")
            prefix = belongs.arg_of("prefix") if belongs is not None else None
        self.args = _ArgumentMap(root, prefix)

    def chars(self, data: str) -> None:
        if self.stack and self.stack[-1].text is not None and \
                self.stack[-1].keyword == "":
            self.stack[-1].text.append(data)
            return
        if data.strip():
            if self.strict or not self.stack:
                self.fail("unexpected character data")


class _Stop(Exception):
    pass


def _read(xml_text: str, strict: bool) -> YangStatement:
    reader = _Reader(strict)
    try:
        reader.parser.Parse(xml_text, True)
    except _Stop:
        raise YinError(reader.diags) from None
    except expat.ExpatError as exc:
        raise YinError([Diagnostic(
            Severity.ERROR, f"malformed XML: {expat.errors.messages[exc.code]}",
            (exc.lineno, exc.offset + 1), "xml")]) from None
    if reader.result is None:
        raise YinError([Diagnostic(Severity.ERROR, "empty document",
                                   (1, 1), "xml")])
    return reader.result


def from_yin(xml_text: str, strict: bool = False) -> YangModule:
    """Decode a YIN document; raises YinError with diagnostics."""
    return YangModule(_read(xml_text, strict), SourceKind.YIN_XML)


def from_yin_fragment(xml_text: str) -> YangStatement:
    """Decode a single statement element such as ``<leaf name="x"/>``."""
    reader = _Reader(strict=False)
    reader.stack.append(_Frame("module", "module", "fragment", (1, 1)))
    reader.ns_stack.append({"": YIN_NS})
    reader.args = _ArgumentMap(YangStatement("module"), None)
    try:
        reader.parser.Parse(xml_text, True)
    except _Stop:
        raise YinError(reader.diags) from None
    except expat.ExpatError as exc:
        raise YinError([Diagnostic(
            Severity.ERROR, f"malformed XML: {expat.errors.messages[exc.code]}",
            (exc.lineno, exc.offset + 1), "xml")]) from None
    children = reader.stack[0].children
    if len(children) != 1:
        raise YinError([Diagnostic(Severity.ERROR,
                                   "expected exactly one statement", (1, 1),
                                   "xml")])
    return children[0]
