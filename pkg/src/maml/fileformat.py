"""The .maml file format: one JSON object per line, header first.

Line 1 is the header object {"viewport_width": N}; every following
non-empty line is exactly one element object. Canonical serialization
emits keys in a fixed order (type, x, y, z, w, h, display, then
kind-specific keys alphabetically) with no insignificant whitespace and
a trailing newline.
"""

from __future__ import annotations

import json
from typing import Any

from .document import Diagnostic, MamlDocument, validate_document
from .model import CANONICAL_TYPE, ElementError, MamlElement, make_element, normalize_kind

MAX_DOCUMENT_BYTES = 16 * 1024 * 1024

_GEOMETRY_ORDER = ("type", "x", "y", "z", "w", "h", "display")


class MamlParseError(ValueError):
    def __init__(self, message: str, line_no: int | None = None):
        prefix = f"line {line_no}: " if line_no is not None else ""
        super().__init__(prefix + message)
        self.line_no = line_no


class MalformedHeader(MamlParseError):
    pass


class MalformedLine(MamlParseError):
    pass


class DocumentTooLarge(MamlParseError):
    pass


class InvalidDocument(MamlParseError):
    """Strict-mode parse of a document with error diagnostics."""

    def __init__(self, diagnostics: list[Diagnostic]):
        first = diagnostics[0]
        super().__init__(f"{first.code}: {first.message}", first.line)
        self.diagnostics = diagnostics


def parse_document(
    source: str,
    strict: bool = True,
    max_bytes: int = MAX_DOCUMENT_BYTES,
) -> MamlDocument | tuple[MamlDocument, list[Diagnostic]]:
    """Parse .maml text. In strict mode returns the document or raises; in
    lenient mode returns (document, diagnostics) and drops unknown element
    properties with a warning instead of failing.
    """
    if len(source.encode("utf-8")) > max_bytes:
        raise DocumentTooLarge(f"document exceeds {max_bytes} bytes")
    source = source.replace("\r\n", "\n")

    lines = source.split("\n")
    diags: list[Diagnostic] = []
    header: dict | None = None
    header_line = 0
    elements: list[MamlElement] = []
    element_lines: list[int] = []

    for line_no, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line:
            continue
        if header is None:
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as exc:
                raise MalformedHeader(f"header is not valid JSON: {exc.msg}", line_no) from exc
            if not isinstance(obj, dict) or "viewport_width" not in obj:
                raise MalformedHeader('header must be an object with "viewport_width"', line_no)
            vw = obj["viewport_width"]
            if not isinstance(vw, int) or isinstance(vw, bool) or vw <= 0:
                raise MalformedHeader("viewport_width must be a positive integer", line_no)
            extra = set(obj) - {"viewport_width"}
            if extra:
                msg = f"unknown header key(s): {', '.join(sorted(extra))}"
                if strict:
                    raise MalformedHeader(msg, line_no)
                diags.append(Diagnostic("UnknownKey", msg, severity="warning", line=line_no))
            header = obj
            header_line = line_no
            continue

        try:
            obj = json.loads(line)
        except json.JSONDecodeError as exc:
            raise MalformedLine(f"not a valid JSON object: {exc.msg}", line_no) from exc
        if not isinstance(obj, dict):
            raise MalformedLine("each element line must be a JSON object", line_no)
        if "type" not in obj:
            raise MalformedLine('element is missing "type"', line_no)
        el, el_diags = _make_element_lenient(obj, line_no) if not strict else (None, [])
        if strict:
            try:
                el = make_element(obj["type"], obj)
            except ElementError as exc:
                raise MalformedLine(str(exc), line_no) from exc
        else:
            diags.extend(el_diags)
            if el is None:
                continue
        elements.append(el)
        element_lines.append(line_no)

    if header is None:
        raise MalformedHeader("missing header line", header_line or 1)

    doc = MamlDocument(viewport_width=header["viewport_width"], elements=tuple(elements))
    doc_diags = validate_document(doc)
    for d in doc_diags:
        line = element_lines[d.element_index] if d.element_index is not None else None
        diags.append(
            Diagnostic(d.code, d.message, d.severity, d.element_index, d.prop, line)
        )
    if strict:
        errors = [d for d in diags if d.severity == "error"]
        if errors:
            raise InvalidDocument(errors)
        return doc
    return doc, diags


def _make_element_lenient(obj: dict, line_no: int) -> tuple[MamlElement | None, list[Diagnostic]]:
    """Lenient element construction: drop unknown keys with a warning, turn
    hard failures into error diagnostics.
    """
    from .model import MANDATORY_PROPS, SCHEMAS

    diags: list[Diagnostic] = []
    try:
        kind = normalize_kind(obj["type"])
    except ElementError as exc:
        return None, [Diagnostic("UnknownKind", str(exc), line=line_no)]
    legal = SCHEMAS[kind].legal() | set(MANDATORY_PROPS) | {"objectFit"}
    if kind == "script":
        legal = {"type", "code"}
    kept = {k: v for k, v in obj.items() if k in legal}
    for k in obj:
        if k not in legal:
            diags.append(
                Diagnostic("UnknownKey", f"dropped unknown property {k!r}", severity="warning", line=line_no)
            )
    try:
        return make_element(kind, kept), diags
    except ElementError as exc:
        diags.append(Diagnostic(type(exc).__name__, str(exc), line=line_no))
        return None, diags


def serialize_element(el: MamlElement) -> str:
    """One canonical JSON line for an element (no newline)."""
    props = dict(el.props)
    props["type"] = CANONICAL_TYPE[el.kind]
    ordered: dict[str, Any] = {}
    for key in _GEOMETRY_ORDER:
        if key in props:
            ordered[key] = props.pop(key)
    for key in sorted(props):
        ordered[key] = props[key]
    return json.dumps(ordered, ensure_ascii=False, separators=(",", ":"))


def serialize_document(doc: MamlDocument) -> str:
    """Canonical text: header, one element per line, trailing newline."""
    out = [json.dumps({"viewport_width": doc.viewport_width}, separators=(",", ":"))]
    out.extend(serialize_element(el) for el in doc.elements)
    return "\n".join(out) + "\n"


def format_document(source: str) -> str:
    """Canonicalize .maml text; idempotent. Propagates parse errors."""
    return serialize_document(parse_document(source, strict=True))
