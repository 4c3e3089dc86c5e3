"""Structural validation against the RFC 6020 substatement tables."""
from __future__ import annotations

from typing import Optional

from .ast import Diagnostic, Severity, YangModule, YangStatement
from . import grammar

# Contexts in which config is not meaningful, so list keys are not required.
_NO_CONFIG_CONTEXT = frozenset({"grouping", "rpc", "action", "input", "output",
                                "notification", "augment"})


def _declared_prefixes(module: YangModule) -> set[str]:
    root = module.root
    prefixes = set()
    if module.prefix:
        prefixes.add(module.prefix)
    for imp in root.find_all("import"):
        p = imp.arg_of("prefix")
        if p:
            prefixes.add(p)
    return prefixes


class _Validator:
    def __init__(self, module: YangModule):
        self.module = module
        self.yang11 = module.yang_version == "1.1"
        self.prefixes = _declared_prefixes(module)
        self.diags: list[Diagnostic] = []

    def error(self, stmt: YangStatement, message: str, rule: str) -> None:
        self.diags.append(Diagnostic(Severity.ERROR, message,
                                     _span(stmt), rule))

    def warn(self, stmt: YangStatement, message: str, rule: str) -> None:
        self.diags.append(Diagnostic(Severity.WARNING, message,
                                     _span(stmt), rule))

    def check_argument(self, stmt: YangStatement) -> None:
        kw = stmt.keyword
        if grammar.takes_argument(kw):
            if stmt.argument is None:
                self.error(stmt, f"{kw} requires an argument", f"{kw}:argument")
            elif kw in grammar.ENUM_ARGUMENTS and \
                    stmt.argument not in grammar.ENUM_ARGUMENTS[kw]:
                self.error(stmt, f"invalid {kw} value {stmt.argument!r}",
                           f"{kw}:argument")
        elif stmt.argument is not None:
            self.error(stmt, f"{kw} takes no argument", f"{kw}:argument")

    def check_cardinality(self, stmt: YangStatement, table: dict[str, str]) -> None:
        counts: dict[str, int] = {}
        for child in stmt.children:
            counts[child.keyword] = counts.get(child.keyword, 0) + 1
        for sub, card in table.items():
            n = counts.get(sub, 0)
            if card in ("1", "+") and n == 0:
                self.error(stmt, f"{stmt.keyword} requires {sub}",
                           f"{stmt.keyword}:{sub}:{card}")
            if card in ("1", "?") and n > 1:
                self.error(stmt, f"{stmt.keyword} allows at most one {sub}",
                           f"{stmt.keyword}:{sub}:{card}")

    def visit(self, stmt: YangStatement, config: Optional[bool]) -> None:
        kw = stmt.keyword
        if stmt.is_extension:
            if stmt.prefix not in self.prefixes:
                self.warn(stmt, f"unknown extension {kw}", "extension")
            return
        table = grammar.allowed_substatements(kw, self.yang11)
        if table is None:
            return
        self.check_argument(stmt)
        self.check_cardinality(stmt, table)
        if kw in _NO_CONFIG_CONTEXT:
            config = None
        cfg = stmt.arg_of("config")
        if cfg in ("true", "false"):
            config = cfg == "true"
        if kw == "list" and config and stmt.find("key") is None:
            self.error(stmt, "list with config true requires key", "list:key")
        for child in stmt.children:
            ckw = child.keyword
            if child.is_extension:
                self.visit(child, config)
                continue
            if not grammar.is_known(ckw, self.yang11):
                self.error(child, f"unknown statement {ckw}", "keyword")
                continue
            if ckw not in table:
                self.error(child, f"{ckw} not allowed in {kw}",
                           f"{kw}:{ckw}")
                continue
            self.visit(child, config)


def _span(stmt: YangStatement) -> tuple[int, int]:
    line, col = stmt.source_span
    return (line, col) if line > 0 else (1, 1)


def validate(module: YangModule) -> list[Diagnostic]:
    """Return all diagnostics; an empty list means the module is valid."""
    v = _Validator(module)
    v.visit(module.root, True)
    return v.diags


def has_errors(diags: list[Diagnostic]) -> bool:
    return any(d.is_error for d in diags)
