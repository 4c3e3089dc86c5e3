"""Acceptance criteria. Each test records one PASS/FAIL line, printed in the
terminal summary (see ``pytest_terminal_summary`` in conftest.py)."""
from __future__ import annotations

import io
import time
from contextlib import redirect_stdout

import oracle_classify as oracle
import test_codec_properties as codec
import test_namespaces as naming
from test_classify import test_random_small_modules_match_oracle
from test_determinism import _artifacts
from yangmorph import cli
from yangmorph.transform.classify import classify_module
from yangmorph.transform.decisions import Policy, final_classifications, resolve
from yangmorph.transform.mapper import convert
from yangmorph.uml import compute_metrics
from yangmorph.yang import emit_yang, from_yin, parse_yang, to_yin

from conftest import CORPUS, FIXTURES, includes_for, load, module_files

RESULTS: list[str] = []
BOTH = (Policy.PREFER_REDUCTION, Policy.PREFER_STRUCTURE)

# statement kinds with a mapping or naming rule, plus what they need to appear
MAPPED_KINDS = {"module", "submodule", "extension", "feature", "identity",
                "typedef", "grouping", "leaf", "leaf-list", "list",
                "notification", "container", "choice", "rpc", "anyxml",
                "uses", "case", "augment", "input", "output"}


def verdict(number: int, title: str, ok: bool, detail: str) -> None:
    RESULTS.append(f"{'PASS' if ok else 'FAIL'} criterion {number}: {title} ({detail})")
    assert ok, detail


def _holds(prop) -> str:
    """Run a property test; return '' or the failure it raised."""
    try:
        prop()
    except Exception as exc:  # falsified example or crash, reported as FAIL
        return f"{prop.__name__}: {type(exc).__name__}: {str(exc)[:200]}"
    return ""


def _within_pct(value: int, target: int, pct: float) -> bool:
    return abs(value - target) <= target * pct


def _metrics(name: str, policy=Policy.PREFER_REDUCTION):
    path = CORPUS / f"{name}.yang"
    module = load(path)
    model, _ = convert(module, policy, includes=includes_for(module, path.parent))
    return compute_metrics(model)


def test_criterion_1_interfaces_metrics():
    start = time.perf_counter()
    m = _metrics("ietf-interfaces")
    elapsed = time.perf_counter() - start
    ok = (m.depth == 1 and m.classes == 3 and m.types == 2
          and _within_pct(m.attributes, 33, 0.15)
          and _within_pct(m.references, 25, 0.15) and elapsed < 2.0)
    verdict(1, "ietf-interfaces metrics", ok,
            f"depth={m.depth} classes={m.classes} types={m.types} "
            f"attributes={m.attributes}/33 references={m.references}/25 "
            f"time={elapsed:.3f}s")


def test_criterion_2_stretch_rows():
    mon = _metrics("ietf-netconf-monitoring")
    routing = _metrics("ietf-routing")
    ok = (abs(mon.classes - 22) <= 3 and _within_pct(mon.attributes, 51, 0.15)
          and abs(routing.classes - 25) <= 4)
    verdict(2, "netconf-monitoring and routing", ok,
            f"monitoring classes={mon.classes}/22 attributes={mon.attributes}/51; "
            f"routing classes={routing.classes}/25")


def test_criterion_3_bijectivity():
    corpus = module_files(CORPUS)
    fixtures = module_files(FIXTURES)
    kinds = {s.keyword for p in module_files(FIXTURES, submodules=True)
             for s in load(p).root.walk()}
    failures = []
    for path in corpus + fixtures:
        for policy in BOTH:
            with redirect_stdout(io.StringIO()):
                code = cli.main(["check", str(path), "--policy", policy.value])
            if code != 0:
                failures.append(f"{path.name}/{policy.value}")
    missing = MAPPED_KINDS - kinds
    ok = len(corpus) >= 6 and len(fixtures) >= 20 and not missing and not failures
    verdict(3, "check round trip", ok,
            f"{len(corpus)} corpus + {len(fixtures)} fixtures x 2 policies, "
            f"failures={failures or 0}, uncovered kinds={sorted(missing) or 0}")


def test_criterion_4_codec():
    failures = []
    for path in module_files(FIXTURES, submodules=True):
        module = load(path)
        text = emit_yang(module)
        if parse_yang(text) != module or emit_yang(parse_yang(text)) != text \
                or from_yin(to_yin(module)) != module:
            failures.append(path.name)
    falsified = [e for e in map(_holds, (codec.test_parse_of_emit_is_identity,
                                         codec.test_emit_is_idempotent,
                                         codec.test_yin_round_trip)) if e]
    settings = codec.PROPERTY_SETTINGS
    ok = (not failures and not falsified and settings.max_examples >= 1000
          and codec.MAX_DEPTH <= 6)
    verdict(4, "codec identities", ok,
            f"fixture failures={failures or 0}, random ASTs={settings.max_examples} "
            f"per property, depth<={codec.MAX_DEPTH}, falsified={falsified or 0}")


def test_criterion_5_naming():
    falsified = _holds(naming.test_ledger_is_injective_and_lossless)
    families = {"x", "x-y", "xy", "x_y"} <= set(naming.FAMILY)
    verdict(5, "ledger injective and lossless", families and not falsified,
            "1000 randomized name sets over the x, x-y, xy, x_y family, "
            f"falsified={falsified or 0}")


def test_criterion_6_oracle():
    small = [p for p in module_files(FIXTURES, submodules=True)
             if len(oracle.nodes(load(p).root)) <= 8]
    disagreements = []
    for path in small:
        module = load(path)
        result = classify_module(module)
        for policy in BOTH:
            final = final_classifications(result, resolve(result.points, [], policy))
            got = {p: c.value for p, c in final.items()}
            if got != oracle.final_labels(module.root, policy.value):
                disagreements.append(f"{path.name}/{policy.value}")
    falsified = _holds(test_random_small_modules_match_oracle)
    ok = len(small) >= 10 and not disagreements and not falsified
    verdict(6, "classification matches brute-force oracle", ok,
            f"{len(small)} fixtures + 1000 random modules, "
            f"disagreements={disagreements or 0}, falsified={falsified or 0}")


def test_criterion_7_determinism():
    paths = module_files(FIXTURES) + module_files(CORPUS)
    differing = [p.name for p in paths if _artifacts(p) != _artifacts(p)]
    verdict(7, "byte-identical artifacts", not differing,
            f"{len(paths)} modules, sha256 of every stage, differing={differing or 0}")


def test_criterion_8_depth_one():
    paths = module_files(FIXTURES) + module_files(CORPUS)
    bad = []
    for path in paths:
        module = load(path)
        for policy in BOTH:
            model, _ = convert(module, policy, includes=includes_for(module, path.parent))
            if compute_metrics(model).depth != 1:
                bad.append(f"{path.name}/{policy.value}")
    verdict(8, "depth is 1 everywhere", not bad,
            f"{len(paths)} modules x 2 policies, violations={bad or 0}")
