"""Randomized codec properties: YANG text and YIN round trips on small ASTs."""
from __future__ import annotations

from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from yangmorph.yang import (YangModule, emit_yang, from_yin, parse_yang,
                            to_yin)
from yangmorph.yang.ast import SourceKind, YangStatement
from yangmorph.yang.grammar import NO_ARGUMENT, YIN_ARGUMENTS

KEYWORDS = sorted(k for k in YIN_ARGUMENTS if k not in ("module", "submodule"))
MAX_DEPTH = 6

ARG_CHARS = st.sampled_from(
    list("abcxyz019-_.:/*+=<>&'\"\\;{} \t\n") + ["é", "λ", "→"])
arguments = st.text(ARG_CHARS, min_size=0, max_size=24)
identifiers = st.from_regex(r"[a-z][a-z0-9\-]{0,8}", fullmatch=True)


def statements(depth: int):
    def build(keyword, argument, children):
        return YangStatement(keyword, None if keyword in NO_ARGUMENT else argument,
                             tuple(children))

    if depth >= MAX_DEPTH:
        children = st.just([])
    else:
        children = st.lists(st.deferred(lambda: statements(depth + 1)),
                            max_size=3 if depth < 3 else 1)
    return st.builds(build, st.sampled_from(KEYWORDS), arguments, children)


modules = st.builds(
    lambda name, kids: YangModule(YangStatement("module", name, tuple(kids)),
                                  SourceKind.YANG_TEXT),
    identifiers, st.lists(statements(2), max_size=4))

PROPERTY_SETTINGS = settings(max_examples=1000, deadline=None,
                             suppress_health_check=[HealthCheck.too_slow])


@PROPERTY_SETTINGS
@given(modules)
def test_parse_of_emit_is_identity(module):
    assert module.root.depth() <= MAX_DEPTH
    text = emit_yang(module)
    assert parse_yang(text) == module


@PROPERTY_SETTINGS
@given(modules)
def test_emit_is_idempotent(module):
    text = emit_yang(module)
    assert emit_yang(parse_yang(text)) == text


@PROPERTY_SETTINGS
@given(modules)
def test_yin_round_trip(module):
    assert from_yin(to_yin(module)) == module


@settings(max_examples=300, deadline=None)
@given(modules)
def test_child_order_is_preserved(module):
    def keywords(stmt):
        return [stmt.keyword, [keywords(c) for c in stmt.children]]

    assert keywords(parse_yang(emit_yang(module)).root) == keywords(module.root)
    assert keywords(from_yin(to_yin(module)).root) == keywords(module.root)
