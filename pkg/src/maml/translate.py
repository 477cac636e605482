"""Layout-snapshot to MAML translation.

A snapshot is a serialized DOM tree with computed geometry and a small
computed-style subset, captured in a real browser by the extractor. The
translator walks it depth-first, classifies each node into a MAML element
kind (or skips it), and emits a flat document with exact source geometry.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from typing import Any

from .document import MamlDocument
from .model import MamlElement, make_element

SNAPSHOT_SCHEMA_VERSION = 1

_STYLE_KEYS = (
    "backgroundColor",
    "borderRadius",
    "color",
    "fontFamily",
    "fontSize",
    "fontStyle",
    "fontWeight",
    "textAlign",
    "zIndex",
    "displayKind",
    "visibility",
    "objectFit",
)

_TEXT_INPUT_TYPES = {"", "text", "search", "email", "password", "tel", "url"}
_BUTTON_INPUT_TYPES = {"button", "submit", "reset"}


class SnapshotError(ValueError):
    pass


class SchemaMismatch(SnapshotError):
    def __init__(self, found: Any):
        super().__init__(
            f"unsupported snapshot schema version {found!r}, expected {SNAPSHOT_SCHEMA_VERSION}"
        )
        self.found = found


@dataclass(frozen=True)
class SnapshotNode:
    tag: str
    rect: tuple[float, float, float, float]  # x, y, w, h in page CSS px
    paint_index: int
    attrs: dict[str, str] = field(default_factory=dict)
    style: dict[str, Any] = field(default_factory=dict)
    text: str = ""  # own text only, not descendants
    children: tuple["SnapshotNode", ...] = ()


@dataclass(frozen=True)
class LayoutSnapshot:
    viewport_width: int
    viewport_height: int
    root: SnapshotNode


@dataclass(frozen=True)
class TranslationResult:
    document: MamlDocument
    warnings: tuple[str, ...] = ()


def _parse_node(obj: dict) -> SnapshotNode:
    rect = obj.get("rect") or {}
    return SnapshotNode(
        tag=str(obj.get("tag", "")).lower(),
        rect=(
            float(rect.get("x", 0)),
            float(rect.get("y", 0)),
            float(rect.get("w", 0)),
            float(rect.get("h", 0)),
        ),
        paint_index=int(obj.get("paint_index", 0)),
        attrs={str(k): str(v) for k, v in (obj.get("attrs") or {}).items()},
        style=dict(obj.get("style") or {}),
        text=str(obj.get("text", "")),
        children=tuple(_parse_node(c) for c in obj.get("children") or []),
    )


def load_snapshot(text: str) -> LayoutSnapshot:
    """Parse snapshot JSON, checking the schema version."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SnapshotError(f"snapshot is not valid JSON: {exc.msg}") from exc
    if not isinstance(obj, dict):
        raise SnapshotError("snapshot must be a JSON object")
    if obj.get("schema") != SNAPSHOT_SCHEMA_VERSION:
        raise SchemaMismatch(obj.get("schema"))
    viewport = obj.get("viewport") or {}
    width = viewport.get("width")
    if not isinstance(width, int) or width <= 0:
        raise SnapshotError("viewport.width must be a positive integer")
    root = obj.get("root")
    if not isinstance(root, dict):
        raise SnapshotError("snapshot has no root node")
    return LayoutSnapshot(
        viewport_width=width,
        viewport_height=int(viewport.get("height", 0)),
        root=_parse_node(root),
    )


_RGB_RE = re.compile(r"rgba?\(\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*(?:,\s*([\d.]+)\s*)?\)")


def css_color_to_hex(value: str) -> str | None:
    """Computed-style color to #RRGGBB / #RRGGBBAA; None if transparent."""
    value = value.strip()
    if not value or value == "transparent":
        return None
    if value.startswith("#"):
        if len(value) == 4:  # #rgb shorthand
            return "#" + "".join(c * 2 for c in value[1:])
        return value
    m = _RGB_RE.match(value)
    if not m:
        return None
    r, g, b = (max(0, min(255, int(m.group(i)))) for i in (1, 2, 3))
    alpha = m.group(4)
    out = f"#{r:02x}{g:02x}{b:02x}"
    if alpha is not None:
        a = max(0.0, min(1.0, float(alpha)))
        if a == 0:
            return None
        if a < 1:
            out += f"{round(a * 255):02x}"
    return out


def _px_number(value: Any) -> float | None:
    if isinstance(value, (int, float)) and not isinstance(value, bool):
        return float(value)
    if isinstance(value, str):
        m = re.match(r"^([\d.]+)px$", value.strip())
        if m:
            return float(m.group(1))
    return None


def _has_visible_background(node: SnapshotNode) -> bool:
    bg = css_color_to_hex(str(node.style.get("backgroundColor", "")))
    radius = _px_number(node.style.get("borderRadius"))
    return bg is not None or bool(radius)


def classify_node(node: SnapshotNode) -> str | None:
    """Map a snapshot node to an element kind, or None to skip it (its
    children are still visited)."""
    tag = node.tag
    x, y, w, h = node.rect
    if tag == "img":
        return "image" if node.attrs.get("src") else None
    if tag == "input":
        itype = node.attrs.get("type", "").lower()
        if itype in _BUTTON_INPUT_TYPES:
            return "button"
        if itype in _TEXT_INPUT_TYPES:
            return "text-field"
        return None
    if tag == "button":
        return "button"
    if tag == "select":
        return "dropdown"
    if tag == "video":
        return "video"
    if node.text.strip():
        return "text"
    if w > 0 and h > 0 and _has_visible_background(node):
        return "shape"
    return None


def _maybe_number(value: Any) -> float | int:
    n = _px_number(value)
    assert n is not None
    return int(n) if n.is_integer() else n


def _number(v: float) -> float | int:
    return int(v) if float(v).is_integer() else v


def _text_props(node: SnapshotNode) -> dict[str, Any]:
    props: dict[str, Any] = {"text": node.text}
    s = node.style
    color = css_color_to_hex(str(s.get("color", "")))
    if color:
        props["color"] = color
    for key in ("fontFamily", "textAlign", "fontStyle"):
        if s.get(key):
            props[key] = str(s[key])
    if s.get("fontWeight"):
        props["fontWeight"] = str(s["fontWeight"])
    size = _px_number(s.get("fontSize"))
    if size:
        props["fontSize"] = _number(size)
    return props


def _shape_props(node: SnapshotNode) -> dict[str, Any]:
    props: dict[str, Any] = {}
    bg = css_color_to_hex(str(node.style.get("backgroundColor", "")))
    if bg:
        props["backgroundColor"] = bg
    radius = _px_number(node.style.get("borderRadius"))
    if radius:
        props["borderRadius"] = _number(radius)
    return props


def _kind_props(kind: str, node: SnapshotNode) -> dict[str, Any]:
    if kind == "text":
        return _text_props(node)
    if kind == "shape":
        return _shape_props(node)
    if kind == "text-field":
        props: dict[str, Any] = {}
        if node.attrs.get("placeholder"):
            props["placeholder"] = node.attrs["placeholder"]
        bg = css_color_to_hex(str(node.style.get("backgroundColor", "")))
        if bg:
            props["backgroundColor"] = bg
        return props
    if kind == "button":
        text = node.text.strip() or node.attrs.get("value", "")
        return {"text": text}
    if kind == "dropdown":
        options = [c.text.strip() for c in node.children if c.tag == "option"]
        return {"options": options or [""]}
    if kind == "image":
        props = {"src": node.attrs["src"]}
        if node.attrs.get("alt"):
            props["alt"] = node.attrs["alt"]
        fit = node.style.get("objectFit")
        if fit in ("fill", "contain", "cover"):
            props["fit"] = fit
        return props
    if kind == "video":
        src = node.attrs.get("src", "")
        return {"src": src} if src else {"src": "about:blank"}
    raise AssertionError(kind)


def _explicit_z(node: SnapshotNode) -> int | None:
    z = node.style.get("zIndex")
    if isinstance(z, int) and not isinstance(z, bool):
        return z
    if isinstance(z, str) and re.match(r"^-?\d+$", z.strip()):
        return int(z)
    return None


def translate_snapshot(snap: LayoutSnapshot) -> TranslationResult:
    """DFS over the snapshot, emitting one element per classified node (two
    for nodes carrying both own text and a visible background: a shape under
    the text at adjacent stacking order). Geometry is copied from the source
    rects exactly; ids are preserved when present, otherwise synthesized
    from the paint index.
    """
    elements: list[MamlElement] = []
    warnings: list[str] = []
    used_ids: set[str] = set()
    emit_index = 0

    def take_id(node: SnapshotNode, suffix: str = "") -> str:
        wanted = node.attrs.get("id") or f"el{node.paint_index}"
        wanted += suffix
        if wanted in used_ids:
            wanted = f"el{node.paint_index}{suffix or 'x'}"
        used_ids.add(wanted)
        return wanted

    def emit(kind: str, node: SnapshotNode, props: dict[str, Any], eid: str) -> None:
        nonlocal emit_index
        x, y, w, h = node.rect
        if x < 0 or y < 0:
            warnings.append(
                f"clamped negative position ({x}, {y}) of <{node.tag}> to the page origin"
            )
            x, y = max(x, 0.0), max(y, 0.0)
        z = _explicit_z(node)
        if z is None:
            z = emit_index
        geometry = {
            "x": _number(x),
            "y": _number(y),
            "z": z,
            "w": _number(w),
            "h": _number(h),
            "display": True,
        }
        elements.append(make_element(kind, {**geometry, **props, "id": eid}))
        emit_index += 1

    def visit(node: SnapshotNode) -> None:
        if node.style.get("displayKind") == "none":
            return
        hidden = node.style.get("visibility") == "hidden"
        x, y, w, h = node.rect
        zero_area = w <= 0 or h <= 0
        kind = None if hidden or zero_area else classify_node(node)
        if kind is not None:
            if kind == "text" and _has_visible_background(node):
                emit("shape", node, _shape_props(node), take_id(node, "s"))
            if node.attrs.get("href") and kind == "text":
                warnings.append(
                    f'dropped link target "{node.attrs["href"]}" (no link property in the schema)'
                )
            emit(kind, node, _kind_props(kind, node), take_id(node))
        if kind == "dropdown":
            return  # option children are consumed by the dropdown itself
        for child in node.children:
            visit(child)

    visit(snap.root)
    if not elements:
        warnings.append("snapshot contains no renderable nodes; emitting an empty document")
    doc = MamlDocument(viewport_width=snap.viewport_width, elements=tuple(elements))
    return TranslationResult(document=doc, warnings=tuple(warnings))
