"""RFC 6020 substatement tables, YANG 1.1 additions and the YIN argument map."""
from __future__ import annotations

from typing import Optional

# Cardinality codes: "1" exactly one, "?" optional, "*" any number, "+" at least one.
_DATA = {"anyxml": "*", "choice": "*", "container": "*", "leaf": "*",
         "leaf-list": "*", "list": "*", "uses": "*"}
_DOC = {"description": "?", "reference": "?"}
_ERR = {"error-app-tag": "?", "error-message": "?", **_DOC}
_BODY = {**_DATA, "augment": "*", "deviation": "*", "extension": "*",
         "feature": "*", "grouping": "*", "identity": "*", "notification": "*",
         "rpc": "*", "typedef": "*"}
_HEADER = {"contact": "?", "organization": "?", "revision": "*",
           "import": "*", "include": "*", "yang-version": "?", **_DOC}

SUBSTATEMENTS: dict[str, dict[str, str]] = {
    # namespace is accepted as optional; see validate.py
    "module": {**_BODY, **_HEADER, "namespace": "?", "prefix": "1"},
    "submodule": {**_BODY, **_HEADER, "belongs-to": "1"},
    "yang-version": {},
    "import": {"prefix": "1", "revision-date": "?"},
    "include": {"revision-date": "?"},
    "namespace": {},
    "prefix": {},
    "belongs-to": {"prefix": "1"},
    "organization": {},
    "contact": {},
    "description": {},
    "reference": {},
    "revision": {**_DOC},
    "revision-date": {},
    "extension": {"argument": "?", "status": "?", **_DOC},
    "argument": {"yin-element": "?"},
    "yin-element": {},
    "identity": {"base": "?", "status": "?", **_DOC},
    "base": {},
    "feature": {"if-feature": "*", "status": "?", **_DOC},
    "if-feature": {},
    "typedef": {"default": "?", "status": "?", "type": "1", "units": "?", **_DOC},
    "type": {"bit": "*", "enum": "*", "length": "?", "path": "?",
             "pattern": "*", "range": "?", "require-instance": "?",
             "type": "*", "base": "?", "fraction-digits": "?"},
    "range": {**_ERR},
    "length": {**_ERR},
    "pattern": {**_ERR},
    "enum": {"status": "?", "value": "?", **_DOC},
    "bit": {"status": "?", "position": "?", **_DOC},
    "path": {}, "require-instance": {}, "fraction-digits": {}, "value": {},
    "position": {}, "default": {}, "units": {}, "presence": {}, "config": {},
    "mandatory": {}, "status": {}, "key": {}, "unique": {},
    "min-elements": {}, "max-elements": {}, "ordered-by": {},
    "error-message": {}, "error-app-tag": {},
    "container": {**_DATA, "config": "?", "grouping": "*", "if-feature": "*",
                  "must": "*", "presence": "?", "status": "?", "typedef": "*",
                  "when": "?", **_DOC},
    "must": {**_ERR},
    "when": {},
    "leaf": {"config": "?", "default": "?", "if-feature": "*",
             "mandatory": "?", "must": "*", "status": "?", "type": "1",
             "units": "?", "when": "?", **_DOC},
    "leaf-list": {"config": "?", "if-feature": "*", "max-elements": "?",
                  "min-elements": "?", "must": "*", "ordered-by": "?",
                  "status": "?", "type": "1", "units": "?", "when": "?",
                  **_DOC},
    "list": {**_DATA, "config": "?", "grouping": "*", "if-feature": "*",
             "key": "?", "max-elements": "?", "min-elements": "?",
             "must": "*", "ordered-by": "?", "status": "?", "typedef": "*",
             "unique": "*", "when": "?", **_DOC},
    "choice": {"anyxml": "*", "case": "*", "config": "?", "container": "*",
               "default": "?", "if-feature": "*", "leaf": "*",
               "leaf-list": "*", "list": "*", "mandatory": "?",
               "status": "?", "when": "?", **_DOC},
    "case": {**_DATA, "if-feature": "*", "status": "?", "when": "?", **_DOC},
    "anyxml": {"config": "?", "if-feature": "*", "mandatory": "?",
               "must": "*", "status": "?", "when": "?", **_DOC},
    "grouping": {**_DATA, "grouping": "*", "status": "?", "typedef": "*",
                 **_DOC},
    "uses": {"augment": "*", "if-feature": "*", "refine": "*",
             "status": "?", "when": "?", **_DOC},
    "refine": {"config": "?", "default": "?", "mandatory": "?",
               "max-elements": "?", "min-elements": "?", "must": "*",
               "presence": "?", **_DOC},
    "augment": {**_DATA, "case": "*", "if-feature": "*", "status": "?",
                "when": "?", **_DOC},
    "rpc": {"grouping": "*", "if-feature": "*", "input": "?", "output": "?",
            "status": "?", "typedef": "*", **_DOC},
    "input": {**_DATA, "grouping": "*", "typedef": "*"},
    "output": {**_DATA, "grouping": "*", "typedef": "*"},
    "notification": {**_DATA, "grouping": "*", "if-feature": "*",
                     "status": "?", "typedef": "*", **_DOC},
    "deviation": {"deviate": "+", **_DOC},
    "deviate": {"config": "?", "default": "?", "mandatory": "?",
                "max-elements": "?", "min-elements": "?", "must": "*",
                "type": "?", "unique": "*", "units": "?"},
}

# Statements and substatements that only exist in YANG 1.1.
YANG11_STATEMENTS: dict[str, dict[str, str]] = {
    "action": dict(SUBSTATEMENTS["rpc"]),
    "anydata": dict(SUBSTATEMENTS["anyxml"]),
    "modifier": {},
}
_ANYDATA = {"anydata": "*"}
_OPS = {"action": "*", "notification": "*"}
YANG11_ADDITIONS: dict[str, dict[str, str]] = {
    "module": _ANYDATA, "submodule": _ANYDATA,
    "import": dict(_DOC), "include": dict(_DOC),
    "identity": {"base": "*", "if-feature": "*"},
    "type": {"base": "*"},
    "enum": {"if-feature": "*"}, "bit": {"if-feature": "*"},
    "pattern": {"modifier": "?"},
    "container": {**_ANYDATA, **_OPS},
    "list": {**_ANYDATA, **_OPS},
    "grouping": {**_ANYDATA, **_OPS},
    "augment": {**_ANYDATA, **_OPS},
    "choice": {**_ANYDATA, "choice": "*"},
    "case": _ANYDATA,
    "input": {**_ANYDATA, "must": "*"},
    "output": {**_ANYDATA, "must": "*"},
    "notification": {**_ANYDATA, "must": "*"},
    "leaf-list": {"default": "*"},
    "when": dict(_DOC),
    "refine": {"if-feature": "*"},
    "deviate": {"default": "*"},
    "uses": _ANYDATA,
}

NO_ARGUMENT = frozenset({"input", "output"})

# keyword -> (argument name, argument encoded as child element)
YIN_ARGUMENTS: dict[str, tuple[Optional[str], bool]] = {
    "action": ("name", False), "anydata": ("name", False),
    "anyxml": ("name", False), "argument": ("name", False),
    "augment": ("target-node", False), "base": ("name", False),
    "belongs-to": ("module", False), "bit": ("name", False),
    "case": ("name", False), "choice": ("name", False),
    "config": ("value", False), "contact": ("text", True),
    "container": ("name", False), "default": ("value", False),
    "description": ("text", True), "deviate": ("value", False),
    "deviation": ("target-node", False), "enum": ("name", False),
    "error-app-tag": ("value", False), "error-message": ("value", True),
    "extension": ("name", False), "feature": ("name", False),
    "fraction-digits": ("value", False), "grouping": ("name", False),
    "identity": ("name", False), "if-feature": ("name", False),
    "import": ("module", False), "include": ("module", False),
    "input": (None, False), "key": ("value", False),
    "leaf": ("name", False), "leaf-list": ("name", False),
    "length": ("value", False), "list": ("name", False),
    "mandatory": ("value", False), "max-elements": ("value", False),
    "min-elements": ("value", False), "modifier": ("value", False),
    "module": ("name", False), "must": ("condition", False),
    "namespace": ("uri", False), "notification": ("name", False),
    "ordered-by": ("value", False), "organization": ("text", True),
    "output": (None, False), "path": ("value", False),
    "pattern": ("value", False), "position": ("value", False),
    "prefix": ("value", False), "presence": ("value", False),
    "range": ("value", False), "reference": ("text", True),
    "refine": ("target-node", False), "require-instance": ("value", False),
    "revision": ("date", False), "revision-date": ("date", False),
    "rpc": ("name", False), "status": ("value", False),
    "submodule": ("name", False), "type": ("name", False),
    "typedef": ("name", False), "unique": ("tag", False),
    "units": ("name", False), "uses": ("name", False),
    "value": ("value", False), "when": ("condition", False),
    "yang-version": ("value", False), "yin-element": ("value", False),
}

KNOWN_KEYWORDS = frozenset(YIN_ARGUMENTS)

ENUM_ARGUMENTS: dict[str, frozenset[str]] = {
    "config": frozenset({"true", "false"}),
    "mandatory": frozenset({"true", "false"}),
    "require-instance": frozenset({"true", "false"}),
    "yin-element": frozenset({"true", "false"}),
    "ordered-by": frozenset({"system", "user"}),
    "status": frozenset({"current", "deprecated", "obsolete"}),
    "yang-version": frozenset({"1", "1.1"}),
}

# Keywords whose argument is free text; the emitter always quotes these.
STRING_KEYWORDS = frozenset({
    "contact", "default", "description", "error-app-tag", "error-message",
    "if-feature", "key", "length", "must", "namespace", "organization",
    "path", "pattern", "presence", "range", "reference", "unique", "units",
    "when", "augment", "deviation", "refine",
})


def allowed_substatements(keyword: str, yang11: bool) -> Optional[dict[str, str]]:
    """Substatement table for ``keyword``; ``None`` if the keyword is unknown."""
    if keyword in SUBSTATEMENTS:
        table = dict(SUBSTATEMENTS[keyword])
    elif yang11 and keyword in YANG11_STATEMENTS:
        table = dict(YANG11_STATEMENTS[keyword])
    else:
        return None
    if yang11:
        table.update(YANG11_ADDITIONS.get(keyword, {}))
    return table


def is_known(keyword: str, yang11: bool) -> bool:
    return keyword in SUBSTATEMENTS or (yang11 and keyword in YANG11_STATEMENTS)


def takes_argument(keyword: str) -> bool:
    return keyword not in NO_ARGUMENT
