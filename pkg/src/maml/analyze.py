"""Page complexity metrics: element count, DOM depth, byte sizes per asset
class, and external request count; plus side-by-side comparison of two pages.

Everything works offline: referenced external assets are counted, never
fetched, and byte counts are of the UTF-8 source text, uncompressed.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from html.parser import HTMLParser

VOID_ELEMENTS = frozenset(
    "area base br col embed hr img input link meta param source track wbr".split()
)

# Attributes that reference an external resource, per tag.
_URL_ATTRS = {
    "link": ("href",),
    "script": ("src",),
    "img": ("src",),
    "video": ("src", "poster"),
    "audio": ("src",),
    "source": ("src",),
    "iframe": ("src",),
    "embed": ("src",),
}


class MalformedHtml(ValueError):
    pass


@dataclass(frozen=True)
class PageReport:
    element_count: int
    max_dom_depth: int
    bytes_html: int
    bytes_css: int
    bytes_script: int
    bytes_media_referenced: int
    external_request_count: int

    @property
    def bytes_total(self) -> int:
        return self.bytes_html + self.bytes_css + self.bytes_script + self.bytes_media_referenced

    def to_json(self) -> dict:
        return {
            "element_count": self.element_count,
            "max_dom_depth": self.max_dom_depth,
            "bytes": {
                "html": self.bytes_html,
                "css": self.bytes_css,
                "script": self.bytes_script,
            },
            "external_requests": self.external_request_count,
        }


class _Collector(HTMLParser):
    def __init__(self):
        super().__init__(convert_charrefs=True)
        self.element_count = 0
        self.max_depth = 0
        self.depth = 0
        self.css_bytes = 0
        self.script_bytes = 0
        self.urls: set[str] = set()
        self._in: str | None = None  # "style" | "script" while inside the block

    def _see_element(self, tag: str, attrs) -> None:
        self.element_count += 1
        self.max_depth = max(self.max_depth, self.depth + 1)
        for name, value in attrs:
            if name == "style" and value:
                self.css_bytes += len(value.encode("utf-8"))
            elif value and name in _URL_ATTRS.get(tag, ()):
                if value.startswith(("http://", "https://", "//")):
                    self.urls.add(value)

    def handle_starttag(self, tag, attrs):
        self._see_element(tag, attrs)
        if tag not in VOID_ELEMENTS:
            self.depth += 1
            if tag in ("style", "script"):
                self._in = tag

    def handle_startendtag(self, tag, attrs):
        self._see_element(tag, attrs)

    def handle_endtag(self, tag):
        if tag not in VOID_ELEMENTS and self.depth > 0:
            self.depth -= 1
        if tag in ("style", "script"):
            self._in = None

    def handle_data(self, data):
        if self._in == "style":
            self.css_bytes += len(data.encode("utf-8"))
        elif self._in == "script":
            self.script_bytes += len(data.encode("utf-8"))


def report_page(html_text: str) -> PageReport:
    """Measure one HTML page. Depth is 1-based from the root element, so
    <html><head/><body/></html> has depth 2.
    """
    collector = _Collector()
    try:
        collector.feed(html_text)
        collector.close()
    except Exception as exc:  # html.parser raises only on truly broken input
        raise MalformedHtml(str(exc)) from exc
    if collector.element_count == 0:
        raise MalformedHtml("no elements found")
    total = len(html_text.encode("utf-8"))
    inline = collector.css_bytes + collector.script_bytes
    return PageReport(
        element_count=collector.element_count,
        max_dom_depth=collector.max_depth,
        bytes_html=max(total - inline, 0),
        bytes_css=collector.css_bytes,
        bytes_script=collector.script_bytes,
        bytes_media_referenced=0,
        external_request_count=len(collector.urls),
    )


_METRICS = (
    "element_count",
    "max_dom_depth",
    "bytes_html",
    "bytes_css",
    "bytes_script",
    "bytes_total",
    "external_request_count",
)


@dataclass(frozen=True)
class DeltaReport:
    original: PageReport
    maml: PageReport

    def delta(self, metric: str) -> int:
        return getattr(self.original, metric) - getattr(self.maml, metric)

    def pct(self, metric: str) -> float | None:
        base = getattr(self.original, metric)
        if base == 0:
            return None
        return 100.0 * self.delta(metric) / base

    def to_json(self) -> dict:
        out = {
            "original": self.original.to_json(),
            "maml": self.maml.to_json(),
            "delta": {m: self.delta(m) for m in _METRICS},
            "pct": {m: self.pct(m) for m in _METRICS},
        }
        return out

    def to_table(self) -> str:
        rows = [("metric", "original", "maml", "delta", "reduction")]
        for m in _METRICS:
            pct = self.pct(m)
            rows.append(
                (
                    m,
                    str(getattr(self.original, m)),
                    str(getattr(self.maml, m)),
                    str(self.delta(m)),
                    f"{pct:.1f}%" if pct is not None else "-",
                )
            )
        widths = [max(len(r[i]) for r in rows) for i in range(5)]
        lines = []
        for r in rows:
            lines.append("  ".join(cell.ljust(widths[i]) for i, cell in enumerate(r)).rstrip())
        return "\n".join(lines) + "\n"


def compare(original: PageReport, maml: PageReport) -> DeltaReport:
    return DeltaReport(original=original, maml=maml)
