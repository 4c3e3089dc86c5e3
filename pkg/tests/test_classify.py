"""Dual classification, decision points and policies."""
from __future__ import annotations

import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

import oracle_classify as oracle
from yangmorph.transform.classify import (Classification as C, DecisionKind,
                                          TransformError, classify_bottom_up,
                                          classify_module, classify_top_down,
                                          detect_discrepancies)
from yangmorph.transform.decisions import (DecisionError, DecisionRecord,
                                           Policy, Provenance, final_classifications,
                                           records_from_json, records_to_json,
                                           resolve)
from yangmorph.yang import parse_statement, parse_yang
from yangmorph.yang.ast import SourceKind, YangModule, YangStatement, node

from conftest import CORPUS, FIXTURES, load

LIST_PATH = "module:ietf_interfaces_parts/container:interfaces/list:interface"


def test_parts_bottom_up(parts):
    interfaces = parts.root.find("container")
    assert classify_bottom_up(interfaces.find("list")) is C.COMPLEX_DATATYPE
    assert classify_bottom_up(interfaces) is C.PREFIX


def test_empty_container_is_undecided():
    assert classify_bottom_up(parse_statement("container mtu-settings { }")) is C.UNDECIDED


def test_parts_top_down(parts):
    interfaces = parts.root.find("container")
    assert classify_top_down(interfaces, C.PACKAGE) is C.PREFIX
    assert classify_top_down(interfaces.find("list"), C.PREFIX) is C.CLASS
    leaf = interfaces.find("list").find("leaf")
    assert classify_top_down(leaf, C.CLASS) is C.ATTRIBUTE


def test_top_down_needs_parent():
    with pytest.raises(TransformError):
        classify_top_down(parse_statement("leaf x { type string; }"), None)


def test_non_data_node_is_rejected():
    with pytest.raises(TransformError):
        classify_bottom_up(node("typedef", "t"))


@pytest.mark.parametrize("text,expected", [
    ("leaf a { type string; }", C.ATTRIBUTE),
    ("leaf-list a { type string; }", C.ATTRIBUTE),
    ("rpc r;", C.METHOD),
    ("choice c { leaf a { type string; } }", C.CLASS),
    ("grouping g { container c { leaf a { type string; } } }", C.PREFIX),
    ("grouping g { leaf a { type string; } leaf b { type string; } }", C.CLASS),
    ("list l { key a; leaf a { type string; } container c { leaf b { type string; } } }", C.CLASS),
    ("notification n { leaf a { type string; } }", C.COMPLEX_DATATYPE),
])
def test_bottom_up_rules(text, expected):
    assert classify_bottom_up(parse_statement(text)) is expected


def test_parts_decision_points(parts):
    points = detect_discrepancies(parts)
    assert [p.schema_path.rsplit("/", 2)[-2:] for p in points] == [
        ["container:interfaces", "list:interface"],
        ["container:interfaces_state", "list:interface"]]
    for p in points:
        assert p.kind is DecisionKind.LIST_DISCREPANCY
        assert (p.bottom_up, p.top_down) == (C.COMPLEX_DATATYPE, C.CLASS)


def test_leaf_only_module_has_no_points():
    assert detect_discrepancies(load(FIXTURES / "leaf_only.yang")) == []


def test_empty_container_point():
    points = detect_discrepancies(parse_yang(
        "module m { namespace u; prefix m; container empty { } }"))
    assert len(points) == 1
    assert points[0].kind is DecisionKind.CONTAINER_EMPTY
    assert points[0].options == (C.PREFIX, C.CLASS)


def test_resolve_policies(parts):
    points = detect_discrepancies(parts)
    reduced = resolve(points, [], Policy.PREFER_REDUCTION)
    assert [r.choice for r in reduced] == [C.COMPLEX_DATATYPE] * 2
    assert all(r.provenance is Provenance.DEFAULT_POLICY for r in reduced)
    assert [r.choice for r in resolve(points, [], Policy.PREFER_STRUCTURE)] == [C.CLASS] * 2
    assert resolve([], [], Policy.REQUIRE_EXPLICIT) == []


def test_require_explicit_reports_open_points(parts):
    with pytest.raises(DecisionError) as info:
        resolve(detect_discrepancies(parts), [], Policy.REQUIRE_EXPLICIT)
    assert len(info.value.unresolved) == 2
    assert "unresolved decision at" in info.value.diagnostics[0].message


def test_record_must_pick_an_offered_option(parts):
    bad = DecisionRecord(LIST_PATH, C.METHOD)
    with pytest.raises(DecisionError) as info:
        resolve(detect_discrepancies(parts), [bad], Policy.PREFER_REDUCTION)
    assert "choice not in options" in info.value.diagnostics[0].message


def test_explicit_record_wins_over_policy(parts):
    rec = DecisionRecord(LIST_PATH, C.CLASS, Provenance.INTERACTIVE)
    out = resolve(detect_discrepancies(parts), [rec], Policy.PREFER_REDUCTION)
    assert out[0] == rec and out[1].choice is C.COMPLEX_DATATYPE


def test_records_json_round_trip():
    recs = [DecisionRecord("a/b", C.PREFIX, Provenance.FILE),
            DecisionRecord("a/c", C.CLASS, Provenance.INTERACTIVE)]
    text = records_to_json(recs)
    assert records_from_json(text) == recs
    assert '"path": "a/b"' in text and '"provenance": "Interactive"' in text


@pytest.mark.parametrize("text", ["{", "{}", '[{"path": "x"}]',
                                  '[{"path": "x", "choice": "Nope"}]'])
def test_bad_decision_files(text):
    with pytest.raises(DecisionError):
        records_from_json(text)


@pytest.mark.parametrize("path", sorted(CORPUS.glob("*.yang")), ids=lambda p: p.name)
def test_agreeing_nodes_keep_their_label(path):
    module = load(path)
    result = classify_module(module)
    for policy in (Policy.PREFER_REDUCTION, Policy.PREFER_STRUCTURE):
        final = final_classifications(result, resolve(result.points, [], policy))
        for p, n in result.nodes.items():
            if n.bottom_up is n.top_down and n.bottom_up is not C.UNDECIDED:
                assert final[p] is n.bottom_up


# -- oracle agreement on small modules -------------------------------------

def _production(module, policy):
    result = classify_module(module)
    final = final_classifications(result, resolve(result.points, [], policy))
    return {p: c.value for p, c in final.items()}


def _check_against_oracle(module):
    assert len(oracle.nodes(module.root)) <= 8
    for policy in (Policy.PREFER_REDUCTION, Policy.PREFER_STRUCTURE):
        assert _production(module, policy) == oracle.final_labels(module.root, policy.value)


SMALL = [p for p in sorted(FIXTURES.glob("*.yang"))
         if len(oracle.nodes(load(p).root)) <= 8]


def test_enough_small_fixtures():
    assert len(SMALL) >= 10


@pytest.mark.parametrize("path", SMALL, ids=lambda p: p.name)
def test_fixture_matches_oracle(path):
    _check_against_oracle(load(path))


@st.composite
def small_trees(draw):
    budget = [draw(st.integers(1, 8))]
    counter = [0]

    def fresh():
        counter[0] += 1
        return f"n{counter[0]}"

    def data(depth, in_choice=False):
        if budget[0] <= 0:
            return None
        budget[0] -= 1
        if in_choice:
            kw = "case"
        else:
            kw = draw(st.sampled_from(
                ["leaf", "leaf-list", "anyxml", "uses", "container", "list",
                 "notification", "choice", "action"] if depth else
                ["leaf", "container", "list", "notification", "choice",
                 "grouping", "rpc", "container", "list"]))
        if kw in ("leaf", "leaf-list"):
            return YangStatement(kw, fresh(), (node("type", "string"),))
        if kw in ("anyxml", "uses"):
            return YangStatement(kw, fresh())
        if kw in ("rpc", "action"):
            kids = []
            for part in draw(st.lists(st.sampled_from(["input", "output"]),
                                      max_size=2, unique=True)):
                if budget[0] <= 0:
                    break
                budget[0] -= 1
                inner = [c for c in (data(depth + 1) for _ in range(draw(st.integers(0, 2))))
                         if c is not None]
                kids.append(YangStatement(part, None, tuple(inner)))
            return YangStatement(kw, fresh(), tuple(kids))
        n = draw(st.integers(0, 3))
        kids = [c for c in (data(depth + 1, kw == "choice") for _ in range(n))
                if c is not None]
        return YangStatement(kw, fresh(), tuple(kids))

    top = []
    while budget[0] > 0:
        top.append(data(0))
    root = YangStatement("module", "m", (node("namespace", "u"), node("prefix", "m"),
                                         *top))
    return YangModule(root, SourceKind.YANG_TEXT)


@settings(max_examples=1000, deadline=None,
          suppress_health_check=[HealthCheck.too_slow])
@given(small_trees())
def test_random_small_modules_match_oracle(module):
    _check_against_oracle(module)
