"""Hand-written YANG text parser.

Comments are discarded. Double-quoted strings get RFC 6020 whitespace
trimming and escape processing; single-quoted strings are literal.
"""
from __future__ import annotations

import bisect
from typing import Optional

from .ast import (KEYWORD_RE, Diagnostic, Severity, SourceKind, YangError,
                  YangModule, YangStatement)

TAB_WIDTH = 8
_ESCAPES = {"n": "\n", "t": "\t", '"': '"', "\\": "\\"}
_UNQUOTED_STOP = set(" \t\n\r;{}\"'")


class ParseError(YangError):
    pass


class _Abort(Exception):
    def __init__(self, diag: Diagnostic):
        self.diag = diag


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self.line_starts = [0]
        for i, ch in enumerate(text):
            if ch == "\n":
                self.line_starts.append(i + 1)

    def span(self, offset: int) -> tuple[int, int]:
        offset = max(0, min(offset, len(self.text) - 1))
        line = bisect.bisect_right(self.line_starts, offset) - 1
        return line + 1, offset - self.line_starts[line] + 1

    def visual_column(self, offset: int) -> int:
        line = bisect.bisect_right(self.line_starts, offset) - 1
        col = 0
        for ch in self.text[self.line_starts[line]:offset]:
            col += TAB_WIDTH if ch == "\t" else 1
        return col

    def fail(self, message: str, offset: int, rule: str) -> None:
        raise _Abort(Diagnostic(Severity.ERROR, message, self.span(offset), rule))

    def skip_space(self) -> None:
        text, n = self.text, len(self.text)
        while self.pos < n:
            ch = text[self.pos]
            if ch in " \t\n\r":
                self.pos += 1
            elif text.startswith("//", self.pos):
                end = text.find("\n", self.pos)
                self.pos = n if end < 0 else end + 1
            elif text.startswith("/*", self.pos):
                end = text.find("*/", self.pos + 2)
                if end < 0:
                    self.fail("unterminated comment", self.pos, "comment")
                self.pos = end + 2
            else:
                break

    def at_end(self) -> bool:
        return self.pos >= len(self.text)

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def unquoted(self) -> str:
        start = self.pos
        text, n = self.text, len(self.text)
        while self.pos < n:
            ch = text[self.pos]
            if ch in _UNQUOTED_STOP:
                break
            if ch == "/" and text.startswith(("//", "/*"), self.pos):
                break
            if ch == "*" and text.startswith("*/", self.pos):
                break
            self.pos += 1
        return text[start:self.pos]

    def quoted(self) -> str:
        quote = self.text[self.pos]
        start = self.pos
        end = self.pos + 1
        if quote == "'":
            close = self.text.find("'", end)
            if close < 0:
                self.fail("unterminated quoted string", start, "string")
            self.pos = close + 1
            return self.text[end:close]
        while True:
            if end >= len(self.text):
                self.fail("unterminated quoted string", start, "string")
            ch = self.text[end]
            if ch == "\\":
                end += 2
                continue
            if ch == '"':
                break
            end += 1
        raw = self.text[start + 1:end]
        self.pos = end + 1
        return _unescape(_trim_lines(raw, self.visual_column(start)))


def _trim_lines(raw: str, quote_col: int) -> str:
    """Apply the double-quote layout rules to the raw string body."""
    if "\n" not in raw:
        return raw
    lines = raw.split("\n")
    out = [lines[0].rstrip(" \t")]
    limit = quote_col + 1
    for i, line in enumerate(lines[1:], 1):
        width = 0
        k = 0
        while k < len(line) and line[k] in " \t" and width < limit:
            width += TAB_WIDTH if line[k] == "\t" else 1
            k += 1
        line = line[k:]
        if i < len(lines) - 1:
            line = line.rstrip(" \t")
        out.append(line)
    return "\n".join(out)


def _unescape(raw: str) -> str:
    if "\\" not in raw:
        return raw
    out = []
    i = 0
    while i < len(raw):
        ch = raw[i]
        if ch == "\\" and i + 1 < len(raw) and raw[i + 1] in _ESCAPES:
            out.append(_ESCAPES[raw[i + 1]])
            i += 2
        else:
            out.append(ch)
            i += 1
    return "".join(out)


class _Parser:
    def __init__(self, text: str):
        self.s = _Scanner(text)
        self.depth = 0

    def eof_inside_block(self) -> None:
        self.s.fail("unbalanced brace", len(self.s.text) - 1, "block")

    def argument(self) -> Optional[str]:
        s = self.s
        ch = s.peek()
        if ch in ("", ";", "{", "}"):
            return None
        if ch in "\"'":
            parts = [s.quoted()]
            while True:
                save = s.pos
                s.skip_space()
                if s.peek() == "+":
                    s.pos += 1
                    s.skip_space()
                    if s.peek() not in ("\"", "'") or s.at_end():
                        if s.at_end() and self.depth:
                            self.eof_inside_block()
                        s.fail("expected quoted string after '+'", s.pos,
                               "string")
                    parts.append(s.quoted())
                else:
                    s.pos = save
                    return "".join(parts)
        return s.unquoted()

    def statement(self) -> YangStatement:
        s = self.s
        start = s.pos
        if s.peek() in ("\"", "'"):
            s.fail("illegal keyword character", start, "keyword")
        keyword = s.unquoted()
        if not keyword or not KEYWORD_RE.match(keyword):
            s.fail("illegal keyword character", start, "keyword")
        s.skip_space()
        if s.at_end() and self.depth:
            self.eof_inside_block()
        arg = self.argument()
        s.skip_space()
        if s.at_end():
            if self.depth:
                self.eof_inside_block()
            s.fail("missing statement terminator", len(s.text) - 1,
                   "terminator")
        ch = s.peek()
        span = s.span(start)
        if ch == ";":
            s.pos += 1
            return YangStatement(keyword, arg, (), span)
        if ch == "{":
            s.pos += 1
            self.depth += 1
            children = self.block()
            self.depth -= 1
            return YangStatement(keyword, arg, tuple(children), span)
        s.fail("missing statement terminator", s.pos, "terminator")
        raise AssertionError("unreachable")

    def block(self) -> list[YangStatement]:
        s = self.s
        children = []
        while True:
            s.skip_space()
            if s.at_end():
                self.eof_inside_block()
            if s.peek() == "}":
                s.pos += 1
                return children
            children.append(self.statement())

    def document(self) -> YangStatement:
        s = self.s
        s.skip_space()
        if s.at_end():
            s.fail("empty input", 0, "module")
        if s.peek() == "}":
            s.fail("unbalanced brace", s.pos, "block")
        root = self.statement()
        s.skip_space()
        if not s.at_end():
            if s.peek() == "}":
                s.fail("unbalanced brace", s.pos, "block")
            s.fail("exactly one module or submodule per file", s.pos,
                   "module")
        if root.keyword not in ("module", "submodule"):
            s.fail(f"expected module or submodule, found {root.keyword!r}",
                   0, "module")
        return root


def parse_yang(text: str) -> YangModule:
    """Parse YANG text into a module; raises ParseError with diagnostics."""
    text = text.replace("\r\n", "\n")
    if text.startswith("﻿"):
        text = text[1:]
    parser = _Parser(text)
    try:
        root = parser.document()
    except _Abort as exc:
        raise ParseError([exc.diag]) from None
    return YangModule(root, SourceKind.YANG_TEXT)


def parse_statement(text: str) -> YangStatement:
    """Parse a single statement that is not necessarily a module."""
    text = text.replace("\r\n", "\n")
    parser = _Parser(text)
    try:
        parser.s.skip_space()
        if parser.s.at_end():
            parser.s.fail("empty input", 0, "module")
        stmt = parser.statement()
        parser.s.skip_space()
        if not parser.s.at_end():
            parser.s.fail("unexpected trailing input", parser.s.pos,
                          "terminator")
    except _Abort as exc:
        raise ParseError([exc.diag]) from None
    return stmt
