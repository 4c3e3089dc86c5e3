"""Parser, validator, canonical emitter and YIN codec."""
from __future__ import annotations

import hashlib
import json

import pytest

from yangmorph.yang import (ParseError, Severity, SourceKind, YangStatement,
                            YinError, emit_yang, from_yin, from_yin_fragment,
                            node, parse_statement, parse_yang, to_yin,
                            validate, yin_fragment)

from conftest import CORPUS, FIXTURES, GOLDEN, YIN_CORPUS, load

ALL_FIXTURES = sorted(FIXTURES.glob("*.yang"))
ALL_CORPUS = sorted(CORPUS.glob("*.yang"))


def _tree(stmt: YangStatement):
    return [stmt.keyword, stmt.argument, [_tree(c) for c in stmt.children]]


# -- parsing ---------------------------------------------------------------

def test_parse_single_leaf():
    stmt = parse_statement("leaf name { type string; }")
    assert stmt == node("leaf", "name", [node("type", "string")])


def test_parse_interfaces_parts(parts):
    root = parts.root
    assert parts.name == "ietf_interfaces_parts"
    assert parts.source_kind is SourceKind.YANG_TEXT
    containers = root.find_all("container")
    assert [c.argument for c in containers] == ["interfaces", "interfaces_state"]
    interface = containers[0].find("list")
    assert [l.argument for l in interface.find_all("leaf")] == ["name", "enabled"]
    assert interface.find_all("leaf")[1].arg_of("default") == "true"


@pytest.mark.parametrize("text,message", [
    ("module m { leaf x { type string", "unbalanced brace"),
    ("module m { leaf x { type string; } } }", "unbalanced brace"),
    ("module m { prefix p }", "missing statement terminator"),
    ("module m { le@f x; }", "illegal keyword character"),
    ('module m { description "open; }', "unterminated quoted string"),
    ("module a { } module b { }", "exactly one module or submodule per file"),
    ("   ", "empty input"),
])
def test_parse_errors(text, message):
    with pytest.raises(ParseError) as info:
        parse_yang(text)
    diag = info.value.diagnostics[0]
    assert diag.severity is Severity.ERROR
    assert message in diag.message
    line, col = diag.span
    lines = text.split("\n")
    assert 1 <= line <= len(lines) and 1 <= col <= len(lines[line - 1]) + 1


def test_unbalanced_brace_points_at_end_of_input():
    text = "module m {\n  leaf x { type string"
    with pytest.raises(ParseError) as info:
        parse_yang(text)
    # spans stay inside the text, so end of input is the last character
    assert info.value.diagnostics[0].span == (2, 22)


def test_comments_are_dropped_and_strings_concatenate():
    m = parse_yang('module m { // note\n /* block */ description "a" + \'b\'; }')
    assert m.root.children == (node("description", "ab"),)


def test_double_quoted_indent_is_trimmed():
    text = 'module m {\n  description "first\n               second\\tx";\n}'
    assert parse_yang(text).root.arg_of("description") == "first\nsecond\tx"


def test_crlf_and_bom_are_normalized():
    assert parse_yang("﻿module m {\r\n}\r\n").root == node("module", "m")


def test_module_properties():
    m = load(FIXTURES / "descriptive.yang")
    assert (m.revision, m.prefix, m.yang_version) == ("2020-01-01", "ds", "1")
    assert not m.is_submodule
    assert load(FIXTURES / "child-submodule.yang").is_submodule


def test_keyword_must_be_identifier():
    with pytest.raises(Exception):
        YangStatement("bad keyword")


def test_parse_matches_pyang_reference_trees():
    # sha256 of pyang's parse trees, frozen once; pyang is not a dependency
    digests = json.loads((GOLDEN / "reference_parse_digests.json").read_text())
    assert len(digests) == len(ALL_CORPUS)
    for path in ALL_CORPUS:
        tree = json.dumps(_tree(load(path).root))
        assert hashlib.sha256(tree.encode()).hexdigest() == digests[path.name], path.name


# -- validation ------------------------------------------------------------

def test_parts_validates_cleanly(parts):
    assert validate(parts) == []


@pytest.mark.parametrize("path", ALL_FIXTURES + ALL_CORPUS, ids=lambda p: p.name)
def test_fixtures_and_corpus_validate(path):
    errors = [d for d in validate(load(path)) if d.severity is Severity.ERROR]
    assert errors == []


def test_leaf_requires_type():
    diags = validate(parse_yang("module m { namespace u; prefix m; leaf name { } }"))
    assert [(d.severity, d.message) for d in diags] == [
        (Severity.ERROR, "leaf requires type")]


def test_config_list_requires_key():
    diags = validate(parse_yang(
        "module m { namespace u; prefix m; list interface { config true; "
        "leaf name {type string;} } }"))
    assert [d.message for d in diags] == ["list with config true requires key"]


def test_state_list_needs_no_key():
    diags = validate(parse_yang(
        "module m { namespace u; prefix m; list s { config false; "
        "leaf n {type string;} } }"))
    assert diags == []


def test_cardinality_at_most_one():
    diags = validate(parse_yang(
        "module m { namespace u; prefix m; leaf x { type string; type int8; } }"))
    assert [d.message for d in diags] == ["leaf allows at most one type"]


def test_unknown_keyword_is_error_and_unknown_extension_is_warning():
    diags = validate(parse_yang(
        "module m { namespace u; prefix m; frobnicate x; zz:thing y; }"))
    kinds = sorted((d.severity.value, d.message) for d in diags)
    assert kinds[0][0] == "error" and "frobnicate" in kinds[0][1]
    assert kinds[1][0] == "warning"


def test_misplaced_statement():
    diags = validate(parse_yang(
        "module m { namespace u; prefix m; leaf x { type string; key y; } }"))
    assert [d.message for d in diags] == ["key not allowed in leaf"]


def test_bad_enum_argument():
    diags = validate(parse_yang(
        "module m { namespace u; prefix m; leaf x { type string; config maybe; } }"))
    assert len(diags) == 1 and diags[0].severity is Severity.ERROR


# -- canonical emitter -----------------------------------------------------

def test_emit_leaf_format():
    stmt = node("leaf", "enabled", [node("type", "boolean"), node("default", "true")])
    assert emit_yang(stmt) == 'leaf enabled {\n    type boolean;\n    default "true";\n}\n'


def test_emit_empty_module():
    assert emit_yang(parse_yang("module m { }")) == "module m {\n}\n"


def test_emit_quotes_arguments_with_spaces():
    text = emit_yang(node("must", "a = b"))
    assert text == 'must "a = b";\n'


@pytest.mark.parametrize("path", ALL_FIXTURES + ALL_CORPUS, ids=lambda p: p.name)
def test_parse_emit_round_trip(path):
    module = load(path)
    text = emit_yang(module)
    again = parse_yang(text)
    assert again == module
    assert emit_yang(again) == text  # idempotence


# -- YIN -------------------------------------------------------------------

def test_yin_fragment_forms():
    assert yin_fragment(node("leaf", "name", [node("type", "string")])) == \
        '<leaf name="name"><type name="string"/></leaf>'
    assert yin_fragment(node("description", "state of the interface")) == \
        "<description><text>state of the interface</text></description>"


def test_yin_empty_module():
    xml = to_yin(parse_yang("module m { }"))
    assert '<module name="m"' in xml
    assert 'xmlns="urn:ietf:params:xml:ns:yang:yin:1"' in xml


def test_yin_leaf_without_type_parses():
    assert from_yin_fragment('<leaf name="name"/>') == node("leaf", "name")


def test_truncated_yin_is_an_error():
    with pytest.raises(YinError):
        from_yin('<module xmlns="urn:ietf:params:xml:ns:yang:yin:1" name="m"><leaf')


def test_strict_yin_rejects_unknown_elements():
    xml = ('<module xmlns="urn:ietf:params:xml:ns:yang:yin:1" name="m">'
           '<bogus name="x"/></module>')
    assert from_yin(xml).root.children[0].keyword == "bogus"
    with pytest.raises(YinError):
        from_yin(xml, strict=True)


@pytest.mark.parametrize("path", ALL_FIXTURES + ALL_CORPUS, ids=lambda p: p.name)
def test_yin_round_trip(path):
    module = load(path)
    back = from_yin(to_yin(module))
    assert back == module
    assert back.source_kind is SourceKind.YIN_XML


@pytest.mark.parametrize("path", sorted(YIN_CORPUS.glob("*.yin")), ids=lambda p: p.name)
def test_reads_reference_yin(path):
    # YIN documents produced by pyang for the corpus modules
    assert from_yin(path.read_text()) == load(CORPUS / f"{path.stem}.yang")
