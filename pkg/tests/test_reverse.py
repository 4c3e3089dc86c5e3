"""UML back to YANG, and round-trip comparison."""
from __future__ import annotations

import pytest

from yangmorph.reverse import (ReverseError, compare, compare_models, revert,
                               revert_all, roundtrip_check)
from yangmorph.transform.decisions import Policy
from yangmorph.transform.mapper import convert
from yangmorph.uml import Stereotype
from yangmorph.yang import emit_yang, parse_yang

from conftest import CORPUS, FIXTURES, includes_for, load, module_files

BOTH = (Policy.PREFER_REDUCTION, Policy.PREFER_STRUCTURE)


def test_parts_reverts_exactly(parts):
    model, profile = convert(parts)
    assert revert(model, profile) == parts


@pytest.mark.parametrize("policy", BOTH, ids=lambda p: p.value)
@pytest.mark.parametrize("path", module_files(FIXTURES) + module_files(CORPUS),
                         ids=lambda p: p.name)
def test_round_trip_is_exact(path, policy):
    module = load(path)
    incs = includes_for(module, path.parent)
    report = roundtrip_check(module, policy=policy, includes=incs)
    assert report.equal, report.differences
    assert report.original_statement_count == report.recovered_statement_count


def test_submodules_come_back_too():
    path = FIXTURES / "parent_module.yang"
    module = load(path)
    incs = includes_for(module, path.parent)
    model, profile = convert(module, includes=incs)
    assert revert_all(model, profile) == [module, *incs]


def test_empty_module():
    model, profile = convert(parse_yang("module m {\n}\n"))
    assert emit_yang(revert(model, profile)) == "module m {\n}\n"


def test_class_without_origin_is_ambiguous(parts):
    model, profile = convert(parts, Policy.PREFER_STRUCTURE)
    cls = model.main_packages()[0].find("InterfacesInterface")
    cls.stereotypes = [s for s in cls.stereotypes
                       if s.tag not in ("list", "container", "case")]
    with pytest.raises(ReverseError) as info:
        revert(model, profile)
    assert "ambiguous reverse mapping" in str(info.value)


def test_renamed_attribute_gives_one_difference(parts):
    model, profile = convert(parts)
    attr = model.main_packages()[0].find("InterfacesInterface").attributes[0]
    attr.name = "nom"
    report = compare_models(parts, model, profile)
    assert not report.equal
    assert report.differences == [{
        "schema_path": "module:ietf_interfaces_parts/container:interfaces/"
                       "list:interface/leaf:name",
        "expected": "leaf:name", "actual": "leaf:nom"}]


def test_renamed_attribute_fails_strictly(parts):
    model, profile = convert(parts)
    model.main_packages()[0].find("InterfacesInterface").attributes[0].name = "nom"
    with pytest.raises(ReverseError) as info:
        revert(model, profile)
    assert "missing ledger entry" in str(info.value)


def test_conflicting_origin_stereotype(parts):
    model, profile = convert(parts)
    cls = model.main_packages()[0].find("InterfacesInterface")
    cls.stereotypes.append(Stereotype("container"))
    with pytest.raises(ReverseError):
        revert(model, profile)


def test_compare_caps_differences():
    a = parse_yang("module m { " + " ".join(f"leaf a{i};" for i in range(80)) + " }")
    b = parse_yang("module m { " + " ".join(f"leaf b{i};" for i in range(80)) + " }")
    assert len(compare(a.root, b.root)) == 50


def test_compare_reports_missing_child():
    a = parse_yang("module m { leaf x; leaf y; }")
    b = parse_yang("module m { leaf x; }")
    assert compare(a.root, b.root) == [
        {"schema_path": "module:m/leaf:y", "expected": "leaf:y", "actual": None}]


def test_report_json_fields(parts):
    report = roundtrip_check(parts, through_xmi=True)
    text = report.to_json()
    for key in ("equal", "differences", "original_statement_count",
                "recovered_statement_count"):
        assert f'"{key}"' in text
