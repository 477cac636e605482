"""MAML to HTML transpilation.

Each element becomes one absolutely positioned direct child of <body>,
styled inline; the page runtime (scaling + event wiring) is appended as the
final body child. The output is a single self-contained HTML file: no
external stylesheets or scripts, only media URLs point outward.
"""

from __future__ import annotations

import html
import json
import re
from dataclasses import dataclass
from importlib import resources

from .document import MamlDocument
from .model import MamlElement
from .script import EventWiring, lower_script, parse_script

RUNTIME_BUDGET_BYTES = 6 * 1024


@dataclass(frozen=True)
class HtmlPage:
    text: str
    asset_manifest: tuple[str, ...] = ()


@dataclass(frozen=True)
class ScaleModel:
    """Width-proportional rescale: x and w are multiplied by
    S = live_width / original_width; y and h are never touched.
    """

    viewport_width_original: int

    def factor(self, live_width: float) -> float:
        return live_width / self.viewport_width_original

    def apply(self, x: float, w: float, live_width: float) -> tuple[float, float]:
        s = self.factor(live_width)
        return x * s, w * s


def scale_geometry(
    x: float, w: float, original_width: float, live_width: float
) -> tuple[float, float]:
    """Pure form of the runtime rescale rule, used by tests and docs."""
    s = live_width / original_width
    return x * s, w * s


def minify_js(source: str) -> str:
    """Whitespace/comment stripping; enough to hold the runtime budget
    without changing semantics (the runtime avoids ASI-sensitive syntax).
    """
    out = []
    in_block_comment = False
    for line in source.split("\n"):
        if in_block_comment:
            end = line.find("*/")
            if end < 0:
                continue
            line = line[end + 2 :]
            in_block_comment = False
        line = line.strip()
        while True:
            start = _comment_start(line)
            if start is None:
                break
            kind, pos = start
            if kind == "line":
                line = line[:pos].rstrip()
            else:
                end = line.find("*/", pos + 2)
                if end < 0:
                    line = line[:pos].rstrip()
                    in_block_comment = True
                    break
                line = (line[:pos] + line[end + 2 :]).strip()
        if line:
            out.append(line)
    return "\n".join(out)


def _comment_start(line: str) -> tuple[str, int] | None:
    in_str: str | None = None
    i = 0
    while i < len(line) - 1:
        c = line[i]
        if in_str:
            if c == "\\":
                i += 2
                continue
            if c == in_str:
                in_str = None
        elif c in "'\"":
            in_str = c
        elif c == "/" and line[i + 1] == "/":
            return ("line", i)
        elif c == "/" and line[i + 1] == "*":
            return ("block", i)
        i += 1
    return None


def runtime_source() -> str:
    return resources.files("maml.assets").joinpath("runtime.js").read_text("utf-8")


def runtime_minified() -> str:
    return minify_js(runtime_source())


def _px(v: float) -> str:
    if isinstance(v, float) and v.is_integer():
        v = int(v)
    return f"{v}px"


def _base_style(el: MamlElement) -> list[str]:
    parts = [
        "position:absolute",
        f"left:{_px(el.x)}",
        f"top:{_px(el.y)}",
        f"z-index:{el.z}",
        f"width:{_px(el.w)}",
        f"height:{_px(el.h)}",
    ]
    return parts


_FONT_STYLE_MAP = (
    ("color", "color", str),
    ("fontFamily", "font-family", str),
    ("fontSize", "font-size", _px),
    ("textAlign", "text-align", str),
    ("fontStyle", "font-style", str),
    ("fontWeight", "font-weight", str),
)


def _attr(name: str, value: str) -> str:
    return f' {name}="{html.escape(str(value), quote=True)}"'


def _open_tag(tag: str, el: MamlElement, style: list[str], extra_attrs: str = "") -> str:
    if not el.display:
        style = style + ["display:none"]
    id_attr = _attr("id", el.props["id"]) if "id" in el.props else ""
    return f"<{tag}{id_attr}{extra_attrs}{_attr('style', ';'.join(style))}>"


def render_element(el: MamlElement) -> str:
    """One markup fragment per element; script elements render to nothing."""
    kind = el.kind
    p = el.props
    style = _base_style(el)

    if kind == "script":
        return ""
    if kind == "text":
        for prop, css, conv in _FONT_STYLE_MAP:
            if prop in p:
                style.append(f"{css}:{conv(p[prop])}")
        return _open_tag("div", el, style) + html.escape(p["text"]) + "</div>"
    if kind == "shape":
        if "backgroundColor" in p:
            style.append(f"background-color:{p['backgroundColor']}")
        if "borderRadius" in p:
            style.append(f"border-radius:{_px(p['borderRadius'])}")
        return _open_tag("div", el, style) + "</div>"
    if kind == "text-field":
        if "backgroundColor" in p:
            style.append(f"background-color:{p['backgroundColor']}")
        extra = ' type="text"'
        if "placeholder" in p:
            extra += _attr("placeholder", p["placeholder"])
        return _open_tag("input", el, style, extra)
    if kind == "button":
        return _open_tag("button", el, style) + html.escape(p["text"]) + "</button>"
    if kind == "dropdown":
        options = "".join(f"<option>{html.escape(o)}</option>" for o in p["options"])
        return _open_tag("select", el, style) + options + "</select>"
    if kind == "image":
        extra = _attr("src", p["src"])
        if "alt" in p:
            extra += _attr("alt", p["alt"])
        if "fit" in p:
            style.append(f"object-fit:{p['fit']}")
        return _open_tag("img", el, style, extra)
    if kind == "carousel":
        inner_style = "position:absolute;left:0;top:0;width:100%;height:100%;object-fit:cover"
        imgs = []
        for i, src in enumerate(p["srcs"]):
            st = inner_style if i == 0 else inner_style + ";display:none"
            imgs.append(f'<img{_attr("src", src)}{_attr("style", st)}>')
        nav = (
            '<button onclick="MAML.cnav(this,-1)"'
            ' style="position:absolute;left:0;top:45%;z-index:1">&lt;</button>'
            '<button onclick="MAML.cnav(this,1)"'
            ' style="position:absolute;right:0;top:45%;z-index:1">&gt;</button>'
        )
        return _open_tag("div", el, style) + "".join(imgs) + nav + "</div>"
    if kind == "video":
        return _open_tag("video", el, style, " controls" + _attr("src", p["src"])) + "</video>"
    raise AssertionError(f"unhandled kind {kind}")


def render_runtime(scale: ScaleModel, wiring: EventWiring) -> str:
    """Script text: the embedded runtime plus its init call carrying the
    original viewport width and the wiring table.
    """
    cfg = json.dumps(
        {"w": scale.viewport_width_original, "wiring": wiring.to_json()},
        ensure_ascii=False,
        separators=(",", ":"),
    )
    return runtime_minified() + f"\nMAML.init({cfg});"


def document_wiring(doc: MamlDocument) -> EventWiring:
    """Lower the document's script element (if any) to the wiring IR."""
    script = doc.script
    if script is None:
        return EventWiring()
    return lower_script(parse_script(script.props["code"]))


def asset_manifest(doc: MamlDocument) -> tuple[str, ...]:
    urls: list[str] = []
    for el in doc.elements:
        if el.kind in ("image", "video"):
            urls.append(el.props["src"])
        elif el.kind == "carousel":
            urls.extend(el.props["srcs"])
    seen: set[str] = set()
    out = []
    for u in urls:
        if u not in seen:
            seen.add(u)
            out.append(u)
    return tuple(out)


def transpile_document(doc: MamlDocument, wiring: EventWiring | None = None) -> HtmlPage:
    """Render a validated document to a single HTML page. If `wiring` is not
    given it is lowered from the document's own script element.
    """
    if wiring is None:
        wiring = document_wiring(doc)
    scale = ScaleModel(doc.viewport_width)
    body = [render_element(el) for el in doc.visible_elements()]
    runtime = render_runtime(scale, wiring)
    text = (
        "<!doctype html>\n"
        "<html>\n"
        '<head><meta charset="utf-8">'
        '<meta name="viewport" content="width=device-width, initial-scale=1"></head>\n'
        "<body>\n"
        + "".join(f"{frag}\n" for frag in body)
        + "<script>\n"
        + runtime
        + "\n</script>\n"
        "</body>\n"
        "</html>\n"
    )
    return HtmlPage(text=text, asset_manifest=asset_manifest(doc))
