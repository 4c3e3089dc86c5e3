"""Command-line interface: convert, revert, check and metrics."""
from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import __version__
from .emit import emit_metrics, emit_plantuml, emit_xmi, import_xmi
from .reverse import compare_models, revert
from .transform.classify import classify_module
from .transform.decisions import (DecisionError, DecisionRecord, Policy,
                                  Provenance, records_from_json,
                                  records_to_json)
from .transform.mapper import transform
from .uml import Metrics, UmlModel, UmlProfile, compute_metrics
from .yang import emit_yang, from_yin, parse_yang, validate
from .yang.ast import Diagnostic, Severity, YangError, YangModule

EXIT_OK, EXIT_DIAGNOSTICS, EXIT_UNRESOLVED = 0, 1, 2
FORMATS = ("xmi", "plantuml", "metrics")


class CliError(Exception):
    """Carries diagnostics to print and the exit code to return."""

    def __init__(self, diagnostics: Sequence[Diagnostic], code: int = EXIT_DIAGNOSTICS):
        super().__init__("; ".join(d.message for d in diagnostics))
        self.diagnostics = list(diagnostics)
        self.code = code


def _use_color() -> bool:
    return not os.environ.get("YANGMORPH_NO_COLOR") and sys.stderr.isatty()


def report(diags: Sequence[Diagnostic], source: str = "") -> None:
    color = _use_color()
    for d in diags:
        text = f"{source}:{d}" if source else str(d)
        if color:
            code = "31" if d.severity is Severity.ERROR else "33"
            text = f"\x1b[{code}m{text}\x1b[0m"
        print(text, file=sys.stderr)


def _fail(message: str, code: int = EXIT_DIAGNOSTICS) -> None:
    raise CliError([Diagnostic(Severity.ERROR, message, rule="cli")], code)


# -- loading ---------------------------------------------------------------

def load_module(path: Path) -> YangModule:
    try:
        text = path.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        _fail(f"cannot read {path}: {exc}")
    try:
        module = from_yin(text) if path.suffix == ".yin" else parse_yang(text)
    except YangError as exc:
        raise CliError(exc.diagnostics) from None
    diags = validate(module)
    errors = [d for d in diags if d.severity is Severity.ERROR]
    if errors:
        raise CliError(diags)
    report(diags, str(path))
    return module


def find_includes(module: YangModule, directory: Path) -> list[YangModule]:
    """Load the submodules named by ``include`` from the input directory."""
    found = []
    for inc in module.root.find_all("include"):
        name = inc.argument
        rev = inc.arg_of("revision-date")
        candidates = ([directory / f"{name}@{rev}.yang"] if rev else []) + [
            directory / f"{name}.yang", directory / f"{name}.yin"]
        candidates += sorted(directory.glob(f"{name}@*.yang"))
        path = next((c for c in candidates if c.is_file()), None)
        if path is None:
            _fail(f"included submodule {name} not found in {directory}")
        found.append(load_module(path))
    return found


def load_records(path: Optional[str]) -> list[DecisionRecord]:
    if not path:
        return []
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        _fail(f"cannot read decision file {path}: {exc}")
    try:
        return records_from_json(text)
    except DecisionError as exc:
        raise CliError(exc.diagnostics) from None


def _policy(args) -> Policy:
    if args.policy:
        return Policy(args.policy)
    if getattr(args, "interactive", False) and sys.stdin.isatty():
        return Policy.REQUIRE_EXPLICIT
    return Policy.PREFER_REDUCTION


def ask_decisions(module: YangModule, includes: Sequence[YangModule],
                  records: list[DecisionRecord]) -> list[DecisionRecord]:
    """Prompt once per open decision point. Only runs on a TTY."""
    if not sys.stdin.isatty():
        return records
    known = {r.schema_path for r in records}
    out = list(records)
    for root in [module.root] + [m.root for m in includes]:
        for point in classify_module(root).points:
            if point.schema_path in known:
                continue
            options = [o.value for o in point.options]
            while True:
                print(f"{point.kind.value} at {point.schema_path}: choose "
                      f"{' / '.join(options)} [{options[0]}]: ", end="",
                      file=sys.stderr, flush=True)
                line = sys.stdin.readline()
                if not line:
                    return out
                answer = line.strip() or options[0]
                match = [o for o in point.options
                         if o.value.lower() == answer.lower()]
                if match:
                    out.append(DecisionRecord(point.schema_path, match[0],
                                              Provenance.INTERACTIVE))
                    break
                print(f"not an option: {answer}", file=sys.stderr)
    return out


def _transform(module, includes, records, policy):
    try:
        return transform(module, records, policy, includes)
    except DecisionError as exc:
        code = EXIT_UNRESOLVED if exc.unresolved else EXIT_DIAGNOSTICS
        raise CliError(exc.diagnostics, code) from None
    except YangError as exc:
        raise CliError(exc.diagnostics) from None


# -- commands --------------------------------------------------------------

def write_outputs(model: UmlModel, profile: UmlProfile, name: str, out: Path,
                  formats: Sequence[str]) -> list[Path]:
    out.mkdir(parents=True, exist_ok=True)
    files: list[tuple[str, str]] = []
    if "xmi" in formats:
        model_xml, profile_xml = emit_xmi(model, profile)
        files += [(f"{name}.uml.xml", model_xml), (f"{name}.profile.xml", profile_xml)]
    if "plantuml" in formats:
        files.append((f"{name}.puml", emit_plantuml(model)))
    if "metrics" in formats:
        files.append((f"{name}.metrics.txt", emit_metrics(model)))
    files.append((f"{name}.decisions.json", records_to_json(profile.decisions)))
    written = []
    for fname, text in files:
        path = out / fname
        path.write_text(text, encoding="utf-8", newline="\n")
        written.append(path)
    return written


def _convert_file(path: Path, args, formats) -> int:
    module = load_module(path)
    includes = find_includes(module, path.parent)
    records = load_records(args.decisions)
    policy = _policy(args)
    if args.interactive:
        records = ask_decisions(module, includes, records)
    model, profile = _transform(module, includes, records, policy)
    report(model.ledger.warnings, str(path))
    out = Path(args.out) if args.out else path.parent
    for written in write_outputs(model, profile, module.name, out, formats):
        print(written)
    return EXIT_OK


def cmd_convert(args) -> int:
    formats = [f.strip() for f in args.format.split(",") if f.strip()]
    unknown = [f for f in formats if f not in FORMATS]
    if unknown:
        _fail(f"unknown format {', '.join(unknown)}")
    source = Path(args.input)
    if not source.is_dir():
        return _convert_file(source, args, formats)
    if args.decisions:
        _fail("--decisions applies to a single input file")
    worst = EXIT_OK
    for path in sorted(source.iterdir()):
        if path.suffix not in (".yang", ".yin"):
            continue
        try:
            if _is_submodule(path):
                continue  # folded into its parent module
            _convert_file(path, args, formats)
        except CliError as exc:
            report(exc.diagnostics, str(path))
            worst = max(worst, exc.code)
    return worst


def _is_submodule(path: Path) -> bool:
    try:
        text = path.read_text(encoding="utf-8")
        module = from_yin(text) if path.suffix == ".yin" else parse_yang(text)
    except (OSError, UnicodeDecodeError, YangError):
        return False  # let _convert_file report it
    return module.is_submodule


def cmd_revert(args) -> int:
    try:
        model_xml = Path(args.model).read_text(encoding="utf-8")
        profile_xml = Path(args.profile).read_text(encoding="utf-8")
    except OSError as exc:
        _fail(f"cannot read input: {exc}")
    try:
        model, profile = import_xmi(model_xml, profile_xml)
        module = revert(model, profile)
    except YangError as exc:
        raise CliError(exc.diagnostics) from None
    text = emit_yang(module)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8", newline="\n")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_check(args) -> int:
    path = Path(args.input)
    module = load_module(path)
    includes = find_includes(module, path.parent)
    if args.uml:
        try:
            texts = [Path(p).read_text(encoding="utf-8") for p in args.uml]
            model, profile = import_xmi(*texts)
        except OSError as exc:
            _fail(f"cannot read input: {exc}")
        except YangError as exc:
            raise CliError(exc.diagnostics) from None
    else:
        model, profile = _transform(module, includes, load_records(args.decisions),
                                    _policy(args))
        model, profile = import_xmi(*emit_xmi(model, profile))
    try:
        result = compare_models(module, model, profile)
    except YangError as exc:
        raise CliError(exc.diagnostics) from None
    sys.stdout.write(result.to_json())
    return EXIT_OK if result.equal else EXIT_DIAGNOSTICS


def cmd_metrics(args) -> int:
    path = Path(args.input)
    module = load_module(path)
    includes = find_includes(module, path.parent)
    model, _ = _transform(module, includes, load_records(args.decisions),
                          _policy(args))
    comparison = None
    if args.compare:
        try:
            comparison = Metrics.from_json(
                json.loads(Path(args.compare).read_text(encoding="utf-8")))
        except (OSError, ValueError, KeyError, TypeError) as exc:
            _fail(f"cannot read comparison metrics {args.compare}: {exc}")
    if args.json:
        m = compute_metrics(model)
        data = {"model": m.to_json()}
        if comparison is not None:
            data["comparison"] = comparison.to_json()
            data["delta"] = {k: m.to_json()[k] - v
                             for k, v in comparison.to_json().items()}
        sys.stdout.write(json.dumps(data, indent=2) + "\n")
    else:
        sys.stdout.write(emit_metrics(model, comparison))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="yangmorph",
        description="Convert YANG modules to UML class models and back.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)
    policies = [p.value for p in Policy]

    def decision_flags(p):
        p.add_argument("--decisions", metavar="FILE",
                       help="JSON decision file to replay")
        p.add_argument("--policy", choices=policies,
                       help="how to settle open decision points")

    conv = sub.add_parser("convert", help="transform YANG or YIN to UML")
    conv.add_argument("input", help="a .yang/.yin file or a directory of them")
    decision_flags(conv)
    conv.add_argument("--interactive", action="store_true",
                      help="ask for each open decision point (TTY only)")
    conv.add_argument("--out", metavar="DIR", help="output directory")
    conv.add_argument("--format", default="xmi,plantuml,metrics",
                      help="comma separated subset of xmi,plantuml,metrics")
    conv.set_defaults(func=cmd_convert)

    rev = sub.add_parser("revert", help="rebuild YANG from a UML model")
    rev.add_argument("model", help="<name>.uml.xml")
    rev.add_argument("profile", help="<name>.profile.xml")
    rev.add_argument("--out", metavar="FILE")
    rev.set_defaults(func=cmd_revert)

    chk = sub.add_parser("check", help="verify the YANG/UML round trip")
    chk.add_argument("input")
    decision_flags(chk)
    chk.add_argument("--uml", nargs=2, metavar=("MODEL", "PROFILE"),
                     help="compare against an existing model/profile pair")
    chk.set_defaults(func=cmd_check)

    met = sub.add_parser("metrics", help="print size metrics")
    met.add_argument("input")
    decision_flags(met)
    met.add_argument("--compare", metavar="JSON",
                     help="metrics JSON to compare against")
    met.add_argument("--json", action="store_true")
    met.set_defaults(func=cmd_metrics)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        report(exc.diagnostics, getattr(args, "input", "") or "")
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
