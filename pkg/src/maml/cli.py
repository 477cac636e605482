"""Command-line entry point: validate, fmt, transpile, translate, analyze.

Exit codes: 0 success, 1 domain failure (validation, parse, schema), 2
usage or IO error. Output files are written atomically.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
from pathlib import Path

from . import analyze, fileformat, translate, transpile
from .document import Diagnostic


def _read(path: str) -> str:
    try:
        return Path(path).read_text("utf-8")
    except OSError as exc:
        print(f"error: cannot read {path}: {exc.strerror}", file=sys.stderr)
        raise SystemExit(2)


def _write_atomic(path: str, data: str) -> None:
    target = Path(path)
    try:
        fd, tmp = tempfile.mkstemp(dir=target.parent or Path("."), prefix=target.name + ".")
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(data)
        os.replace(tmp, path)
    except OSError as exc:
        print(f"error: cannot write {path}: {exc.strerror}", file=sys.stderr)
        raise SystemExit(2)


def _print_diags(diags: list[Diagnostic], filename: str) -> None:
    for d in diags:
        print(d.render(filename), file=sys.stderr)


def _load_document(path: str, strict: bool):
    source = _read(path)
    try:
        if strict:
            return fileformat.parse_document(source, strict=True), []
        doc, diags = fileformat.parse_document(source, strict=False)
        return doc, diags
    except fileformat.InvalidDocument as exc:
        _print_diags(exc.diagnostics, path)
        raise SystemExit(1)
    except fileformat.MamlParseError as exc:
        line = exc.line_no if exc.line_no is not None else 0
        print(f"{path}:{line}: error: {type(exc).__name__}: {exc}", file=sys.stderr)
        raise SystemExit(1)


def cmd_validate(args) -> int:
    doc, diags = _load_document(args.input, strict=False)
    _print_diags(diags, args.input)
    return 1 if any(d.severity == "error" for d in diags) else 0


def cmd_fmt(args) -> int:
    source = _read(args.input)
    try:
        formatted = fileformat.format_document(source)
    except fileformat.MamlParseError as exc:
        line = exc.line_no if exc.line_no is not None else 0
        print(f"{args.input}:{line}: error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    if args.check:
        return 0 if formatted == source else 1
    if formatted != source:
        _write_atomic(args.input, formatted)
    return 0


def cmd_transpile(args) -> int:
    doc, diags = _load_document(args.input, strict=args.strict)
    if diags:
        _print_diags(diags, args.input)
        if any(d.severity == "error" for d in diags):
            return 1
    page = transpile.transpile_document(doc)
    out = args.output or str(Path(args.input).with_suffix(".html"))
    _write_atomic(out, page.text)
    if args.emit_manifest:
        manifest_path = str(Path(out).with_suffix(".assets.json"))
        _write_atomic(manifest_path, json.dumps(list(page.asset_manifest), indent=2) + "\n")
    return 0


def cmd_translate(args) -> int:
    source = _read(args.input)
    try:
        snap = translate.load_snapshot(source)
    except translate.SnapshotError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    result = translate.translate_snapshot(snap)
    for warning in result.warnings:
        print(f"{args.input}: warning: {warning}", file=sys.stderr)
    out = args.output or str(Path(args.input).with_suffix(".maml"))
    _write_atomic(out, fileformat.serialize_document(result.document))
    return 0


def cmd_analyze(args) -> int:
    try:
        original = analyze.report_page(_read(args.original))
        maml_report = analyze.report_page(_read(args.maml))
    except analyze.MalformedHtml as exc:
        print(f"error: malformed HTML: {exc}", file=sys.stderr)
        return 1
    delta = analyze.compare(original, maml_report)
    if args.json:
        print(json.dumps(delta.to_json(), indent=2))
    else:
        print(delta.to_table(), end="")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="maml", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a .maml file and print diagnostics")
    p.add_argument("input")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("fmt", help="rewrite a .maml file in canonical form")
    p.add_argument("input")
    p.add_argument("--check", action="store_true", help="exit 1 if not canonical, write nothing")
    p.set_defaults(func=cmd_fmt)

    p = sub.add_parser("transpile", help="convert a .maml file to a self-contained HTML page")
    p.add_argument("input")
    p.add_argument("-o", "--output")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--strict", dest="strict", action="store_true", default=True)
    mode.add_argument("--lenient", dest="strict", action="store_false")
    p.add_argument("--emit-manifest", action="store_true", help="also write the asset manifest JSON")
    p.set_defaults(func=cmd_transpile)

    p = sub.add_parser("translate", help="convert a layout snapshot JSON to a .maml file")
    p.add_argument("input")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_translate)

    p = sub.add_parser("analyze", help="compare complexity metrics of two HTML pages")
    p.add_argument("original")
    p.add_argument("maml")
    p.add_argument("--json", action="store_true", help="emit the report as JSON")
    p.set_defaults(func=cmd_analyze)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
