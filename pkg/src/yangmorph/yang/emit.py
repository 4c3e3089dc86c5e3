"""Canonical YANG text serializer."""
from __future__ import annotations

from typing import Union

from .ast import YangModule, YangStatement
from .grammar import STRING_KEYWORDS

INDENT = "    "
_SPECIAL = set(" \t\n\r\"';{}")


def needs_quotes(keyword: str, argument: str) -> bool:
    if argument == "" or keyword in STRING_KEYWORDS:
        return True
    if any(ch in _SPECIAL for ch in argument):
        return True
    return any(seq in argument for seq in ("//", "/*", "*/"))


def _escape(text: str, keep_newlines: bool) -> str:
    text = text.replace("\\", "\\\\").replace('"', '\\"').replace("\t", "\\t")
    if not keep_newlines:
        text = text.replace("\n", "\\n")
    return text


def _multiline_safe(argument: str) -> bool:
    if "\n" not in argument or "\r" in argument:
        return False
    lines = argument.split("\n")
    return not any(line.endswith(" ") for line in lines[:-1])


def quote_argument(keyword: str, argument: str, quote_col: int) -> str:
    """Render an argument; ``quote_col`` is the column of the opening quote."""
    if not needs_quotes(keyword, argument):
        return argument
    if _multiline_safe(argument):
        pad = " " * (quote_col + 1)
        lines = _escape(argument, keep_newlines=True).split("\n")
        body = lines[0] + "".join(
            "\n" + (pad + line if line else "") for line in lines[1:])
        return f'"{body}"'
    return f'"{_escape(argument, keep_newlines=False)}"'


def _emit(stmt: YangStatement, level: int, out: list[str]) -> None:
    indent = INDENT * level
    head = indent + stmt.keyword
    if stmt.argument is not None:
        head += " " + quote_argument(stmt.keyword, stmt.argument, len(head) + 1)
    if stmt.children:
        out.append(head + " {")
        for child in stmt.children:
            _emit(child, level + 1, out)
        out.append(indent + "}")
    elif stmt.keyword in ("module", "submodule") and level == 0:
        out.append(head + " {")
        out.append("}")
    else:
        out.append(head + ";")


def emit_yang(target: Union[YangModule, YangStatement]) -> str:
    """Serialize a module or statement as canonical YANG text."""
    stmt = target.root if isinstance(target, YangModule) else target
    out: list[str] = []
    _emit(stmt, 0, out)
    return "\n".join(out) + "\n"
