"""Name sanitizing, collision handling and the bijective ledger."""
from __future__ import annotations

import itertools

import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from yangmorph.namespaces import (NameLedger, NamespaceKind, NamingError,
                                  assign_names, camel_join, recover_original,
                                  removed_characters, restore_characters,
                                  sanitize, walk_named)
from yangmorph.transform.decisions import classify_and_resolve
from yangmorph.yang import parse_yang
from yangmorph.yang.ast import SourceKind, YangModule, YangStatement, node

from conftest import CORPUS, load


@pytest.mark.parametrize("raw,clean", [
    ("ietf-interfaces", "ietfinterfaces"),
    ("name", "name"),
    ("interfaces_state", "interfacesstate"),
    ("a/b-c_d", "abcd"),
])
def test_sanitize(raw, clean):
    assert sanitize(raw) == clean
    assert sanitize(sanitize(raw)) == sanitize(raw)
    assert restore_characters(clean, removed_characters(raw)) == raw


@pytest.mark.parametrize("raw", ["", "-_/", "--"])
def test_sanitize_rejects_empty_result(raw):
    with pytest.raises(NamingError):
        sanitize(raw)


def test_camel_join():
    assert camel_join("interfaces", "interface") == "InterfacesInterface"


def _module(text):
    return parse_yang("module m { namespace u; prefix m; " + text + " }")


def test_typedef_collides_with_leaf():
    ledger = assign_names(_module("typedef speed { type uint32; } "
                                  "leaf speed { type speed; }"))
    assert ledger.by_path("module:m/typedef:speed").uml_name == "td_speed"
    assert ledger.by_path("module:m/leaf:speed").uml_name == "speed"
    assert recover_original("td_speed", NamespaceKind.TYPEDEF, ledger) == \
        "module:m/typedef:speed"


@pytest.mark.parametrize("kw,prefix", [
    ("extension", "ext_"), ("feature", "feat_"), ("identity", "iden_"),
    ("grouping", "gr_"), ("typedef", "td_")])
def test_collision_prefix_per_space(kw, prefix):
    body = {"extension": "", "feature": "", "identity": "",
            "grouping": "leaf q { type string; }", "typedef": "type string;"}[kw]
    ledger = assign_names(_module(f"{kw} x {{ {body} }} container x {{ leaf y {{ type string; }} }}"))
    assert ledger.by_path(f"module:m/{kw}:x").uml_name == prefix + "x"
    assert ledger.by_path(f"module:m/{kw}:x").applied_prefix == prefix


def test_unique_names_only_sanitized():
    ledger = assign_names(_module("leaf a-b { type string; } typedef c_d { type string; }"))
    assert [e.uml_name for e in ledger.entries] == ["m", "ab", "cd"]


def test_parts_names_after_reduction(parts):
    _, _, final = classify_and_resolve(parts)
    ledger = assign_names(parts, final)
    names = {e.schema_path: e.uml_name for e in ledger.entries}
    lists = [p for p in names if p.endswith("list:interface")]
    assert sorted(names[p] for p in lists) == ["InterfacesInterface",
                                                "InterfacesstateInterface"]
    keyed = [(e.scope, e.uml_name) for e in ledger.entries]
    assert all(a != b for a, b in itertools.combinations(keyed, 2))


def test_ancestor_prefix_then_numeric_suffix():
    ledger = assign_names(_module(
        "container a-b { leaf x { type string; } } container ab { leaf x { type string; } }"
        " container p { container ab { leaf x { type string; } } }"))
    by = {e.schema_path: e for e in ledger.entries}
    assert by["module:m/container:a-b"].uml_name == "Ab"
    assert by["module:m/container:ab"].uml_name == "Ab_2"
    assert by["module:m/container:ab"].applied_suffix == "_2"
    assert by["module:m/container:p/container:ab"].uml_name == "PAb"


def test_recover_module_name():
    ledger = assign_names(load(CORPUS / "ietf-interfaces.yang"))
    assert recover_original("ietfinterfaces", NamespaceKind.MODULE, ledger) == \
        "module:ietf-interfaces"


def test_recover_unknown_name():
    with pytest.raises(NamingError):
        recover_original("nosuch", NamespaceKind.GROUPING, assign_names(_module("")))


def test_other_characters_warn():
    ledger = assign_names(_module("leaf a.b { type string; }"))
    assert [d.severity.value for d in ledger.warnings] == ["warning"]
    assert ledger.by_path("module:m/leaf:a.b").uml_name == "a.b"


def test_ledger_json_round_trip():
    ledger = assign_names(load(CORPUS / "ietf-routing.yang"))
    assert NameLedger.from_json(ledger.to_json()) == ledger


def test_every_keyword_maps_to_one_space():
    assert len(NamespaceKind) == 7


# -- properties ------------------------------------------------------------

FAMILY = ["x", "x-y", "xy", "x_y", "y", "x/y", "xy-", "X-y"]
names = st.sampled_from(FAMILY)
DATA = ["leaf", "leaf-list", "container", "list", "choice", "case", "anyxml"]
TOP = ["typedef", "grouping", "identity", "feature", "extension"]


@st.composite
def data_nodes(draw, depth=0, parent="container"):
    kw = draw(st.sampled_from(["case"] if parent == "choice" else
                              [k for k in DATA if k != "case"]))
    name = draw(names)
    kids = []
    if kw in ("container", "list", "choice", "case") and depth < 3:
        chosen = draw(st.lists(names, max_size=3, unique=True))
        for n in chosen:
            child = draw(data_nodes(depth + 1, kw))
            kids.append(YangStatement(child.keyword, n, child.children))
    if kw in ("leaf", "leaf-list"):
        kids = [node("type", "string")]
    return YangStatement(kw, name, tuple(kids))


@st.composite
def name_modules(draw):
    children = [node("namespace", "urn:x"), node("prefix", "x")]
    for kw in TOP:
        for n in draw(st.lists(names, max_size=3, unique=True)):
            body = (node("type", "string"),) if kw == "typedef" else ()
            children.append(YangStatement(kw, n, body))
    for n in draw(st.lists(names, max_size=4, unique=True)):
        child = draw(data_nodes())
        children.append(YangStatement(child.keyword, n, child.children))
    return YangModule(YangStatement("module", draw(names), tuple(children)),
                      SourceKind.YANG_TEXT)


@settings(max_examples=1000, deadline=None,
          suppress_health_check=[HealthCheck.too_slow])
@given(name_modules())
def test_ledger_is_injective_and_lossless(module):
    _check_ledger(module, assign_names(module), {})
    _, _, final = classify_and_resolve(module)
    _check_ledger(module, assign_names(module, final), final)


def _check_ledger(module, ledger, final):
    keys = [(e.scope, e.uml_name) for e in ledger.entries]
    assert len(keys) == len(set(keys)), "uml names clash in a scope"
    paths = [e.schema_path for e in ledger.entries]
    assert len(paths) == len(set(paths)), "a path was named twice"
    originals = {i.path: i.stmt.argument for i in walk_named(module.root)}
    for e in ledger.entries:
        assert "-" not in e.uml_name and "/" not in e.uml_name
        assert recover_original(e.uml_name, e.namespace, ledger, e.scope) == e.schema_path
        if not e.implicit:
            assert originals[e.schema_path] == e.original_name
    reduced = {p for p, c in final.items() if c.value == "Prefix"}
    named = {i.path for i in walk_named(module.root)}
    assert named - reduced <= set(paths)
    assert assign_names(module, final) == ledger  # deterministic


@settings(max_examples=200, deadline=None)
@given(st.text(min_size=1, max_size=12))
def test_sanitize_properties(name):
    try:
        clean = sanitize(name)
    except NamingError:
        assert all(ch in "-/_" for ch in name)
        return
    assert sanitize(clean) == clean
    assert restore_characters(clean, removed_characters(name)) == name
