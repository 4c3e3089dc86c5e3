from __future__ import annotations

from pathlib import Path

import pytest

from yangmorph.yang import parse_yang

TESTS = Path(__file__).parent
FIXTURES = TESTS / "fixtures"
CORPUS = TESTS / "corpus" / "ietf"
YIN_CORPUS = TESTS / "corpus" / "yin"
GOLDEN = TESTS / "golden"
INVALID = TESTS / "invalid"
PARTS = FIXTURES / "interfaces_parts.yang"


def load(path: Path):
    return parse_yang(path.read_text(encoding="utf-8"))


def includes_for(module, directory: Path):
    """Submodules named by ``include`` that live next to the module."""
    names = {i.argument for i in module.root.find_all("include")}
    out = []
    for path in sorted(directory.glob("*.yang")):
        if path.stem.split("@")[0] in names:
            out.append(load(path))
    return out


def module_files(directory: Path, submodules: bool = False) -> list[Path]:
    files = sorted(directory.glob("*.yang"))
    if submodules:
        return files
    return [f for f in files if not load(f).is_submodule]


def corpus_file(name: str) -> Path:
    matches = sorted(CORPUS.glob(f"{name}*.yang"))
    exact = [m for m in matches if m.stem.split("@")[0] == name]
    return exact[0]


@pytest.fixture(scope="session")
def parts():
    return load(PARTS)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in sorted(RESULTS, key=lambda l: int(l.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
