"""YANG parsing, validation, YIN conversion and canonical serialization."""
from .ast import (Diagnostic, Severity, SourceKind, YangError, YangModule,
                  YangStatement, node)
from .emit import emit_yang
from .parser import ParseError, parse_statement, parse_yang
from .validate import has_errors, validate
from .yin import YinError, from_yin, from_yin_fragment, to_yin, yin_fragment

__all__ = [
    "Diagnostic", "Severity", "SourceKind", "YangError", "YangModule",
    "YangStatement", "node", "emit_yang", "ParseError", "parse_statement",
    "parse_yang", "has_errors", "validate", "YinError", "from_yin",
    "from_yin_fragment", "to_yin", "yin_fragment",
]
