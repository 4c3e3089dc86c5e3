"""AST types shared by the YANG parser, validator, YIN codec and emitter."""
from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from typing import Iterator, Optional

KEYWORD_RE = re.compile(
    r"[A-Za-z_][A-Za-z0-9._-]*(?::[A-Za-z_][A-Za-z0-9._-]*)?\Z")


class Severity(enum.Enum):
    ERROR = "error"
    WARNING = "warning"


class SourceKind(enum.Enum):
    YANG_TEXT = "yang"
    YIN_XML = "yin"


@dataclass(frozen=True)
class Diagnostic:
    severity: Severity
    message: str
    span: tuple[int, int] = (1, 1)
    rule: str = ""

    @property
    def is_error(self) -> bool:
        return self.severity is Severity.ERROR

    def __str__(self) -> str:
        line, col = self.span
        tag = f" [{self.rule}]" if self.rule else ""
        return f"{line}:{col}: {self.severity.value}: {self.message}{tag}"


class YangError(Exception):
    """Raised when an input cannot be turned into an AST."""

    def __init__(self, diagnostics: list[Diagnostic]):
        self.diagnostics = list(diagnostics)
        super().__init__("; ".join(str(d) for d in self.diagnostics))


@dataclass(frozen=True)
class YangStatement:
    """One YANG statement: keyword, optional argument, ordered substatements.

    Equality is structural and ignores ``source_span``.
    """

    keyword: str
    argument: Optional[str] = None
    children: tuple["YangStatement", ...] = ()
    source_span: tuple[int, int] = field(default=(0, 0), compare=False,
                                         repr=False)

    def __post_init__(self):
        if not KEYWORD_RE.match(self.keyword):
            raise ValueError(f"illegal keyword {self.keyword!r}")
        if not isinstance(self.children, tuple):
            object.__setattr__(self, "children", tuple(self.children))

    @property
    def prefix(self) -> Optional[str]:
        return self.keyword.split(":", 1)[0] if ":" in self.keyword else None

    @property
    def is_extension(self) -> bool:
        return ":" in self.keyword

    def find(self, keyword: str) -> Optional["YangStatement"]:
        for child in self.children:
            if child.keyword == keyword:
                return child
        return None

    def find_all(self, keyword: str) -> list["YangStatement"]:
        return [c for c in self.children if c.keyword == keyword]

    def arg_of(self, keyword: str) -> Optional[str]:
        child = self.find(keyword)
        return child.argument if child is not None else None

    def walk(self) -> Iterator["YangStatement"]:
        yield self
        for child in self.children:
            yield from child.walk()

    def depth(self) -> int:
        return 1 + max((c.depth() for c in self.children), default=0)

    def count(self) -> int:
        return sum(1 for _ in self.walk())


def node(keyword: str, argument: Optional[str] = None,
         children=()) -> YangStatement:
    """Shorthand constructor used heavily in tests."""
    return YangStatement(keyword, argument, tuple(children))


@dataclass(frozen=True)
class YangModule:
    root: YangStatement
    source_kind: SourceKind = SourceKind.YANG_TEXT

    def __post_init__(self):
        if self.root.keyword not in ("module", "submodule"):
            raise ValueError(
                f"root statement must be module or submodule, "
                f"not {self.root.keyword!r}")

    @property
    def name(self) -> str:
        return self.root.argument or ""

    @property
    def is_submodule(self) -> bool:
        return self.root.keyword == "submodule"

    @property
    def revision(self) -> Optional[str]:
        rev = self.root.find("revision")
        return rev.argument if rev is not None else None

    @property
    def prefix(self) -> Optional[str]:
        if self.is_submodule:
            belongs = self.root.find("belongs-to")
            return belongs.arg_of("prefix") if belongs is not None else None
        return self.root.arg_of("prefix")

    @property
    def yang_version(self) -> str:
        return self.root.arg_of("yang-version") or "1"

    def __eq__(self, other):
        if not isinstance(other, YangModule):
            return NotImplemented
        return self.root == other.root

    def __hash__(self):
        return hash(self.root)
