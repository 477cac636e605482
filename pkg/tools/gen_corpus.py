#!/usr/bin/env python3
"""Regenerate the bloated fixture corpus under tests/fixtures/corpus/.

Each fixture is a pair: a deliberately heavy HTML page (external framework
references, unused inline CSS, analytics-style scripts, deeply nested
wrappers) and the layout snapshot a browser capture of it would produce.
Deterministic: re-running produces byte-identical files.
"""

from __future__ import annotations

import json
import random
from pathlib import Path

OUT = Path(__file__).resolve().parent.parent / "tests" / "fixtures" / "corpus"

N_PAGES = 12
VIEWPORT_W = 1200

_HEADINGS = (
    "Breaking News", "Daily Digest", "Market Watch", "Tech Review",
    "Local Weather", "Sports Tonight", "Travel Guide", "Food & Recipes",
)
_PARAS = (
    "Connectivity in many regions remains slow and expensive, yet pages keep growing heavier every year.",
    "A lighter page is a faster page: fewer bytes to ship, fewer nodes to lay out, less script to parse.",
    "Readers on entry-level phones wait the longest and pay the most per megabyte of page weight.",
    "Most of the stylesheet below is never used by any element on this page, which is sadly typical.",
    "Third-party analytics bundles routinely outweigh the article text they are attached to.",
)
_COLORS = ("rgb(180, 40, 40)", "rgb(30, 90, 160)", "rgb(40, 140, 80)", "rgb(120, 60, 160)")


def junk_css(rng: random.Random, rules: int) -> str:
    out = ["/* framework reset + component library (mostly unused) */"]
    for i in range(rules):
        cls = f".c{i}-{rng.randrange(1000)}"
        out.append(
            f"{cls} {{ margin: {rng.randrange(40)}px; padding: {rng.randrange(40)}px; "
            f"display: flex; flex-direction: {'row' if i % 2 else 'column'}; "
            f"align-items: center; justify-content: space-between; "
            f"border: 1px solid rgb({rng.randrange(255)}, {rng.randrange(255)}, {rng.randrange(255)}); "
            f"box-shadow: 0 {rng.randrange(8)}px {rng.randrange(24)}px rgba(0,0,0,0.{rng.randrange(10)}); }}"
        )
        out.append(
            f"{cls}:hover {{ transform: translateY(-{rng.randrange(6)}px); "
            f"transition: all 0.{rng.randrange(9)}s ease-in-out; opacity: 0.{rng.randrange(9)}; }}"
        )
    return "\n".join(out)


def junk_js(rng: random.Random, fns: int) -> str:
    out = ["/* bundled analytics + ui helpers */", "(function(){var q=[];"]
    for i in range(fns):
        out.append(
            f"function track_{i}_{rng.randrange(1000)}(ev, meta) {{"
            f" q.push({{t: Date.now(), ev: ev, meta: meta, session: '{rng.randrange(1 << 30):x}',"
            f" sample: {rng.random():.6f} }});"
            f" if (q.length > {rng.randrange(10, 200)}) {{ q.shift(); }} return q.length; }}"
        )
    out.append("window.__telemetryQueue = q;})();")
    return "\n".join(out)


def build_page(index: int) -> tuple[str, dict]:
    rng = random.Random(1000 + index)
    items = []
    y = 20
    items.append(("heading", rng.choice(_HEADINGS), 40, y, 600, 48))
    y += 70
    n_blocks = rng.randint(4, 8)
    for b in range(n_blocks):
        kind = rng.choice(("para", "para", "img", "button", "banner", "input"))
        if kind == "para":
            items.append(("para", _PARAS[b % len(_PARAS)], 40, y, 720, 60))
            y += 80
        elif kind == "img":
            items.append(("img", f"https://media.example.com/photo-{index}-{b}.webp", 40, y, 640, 360))
            y += 380
        elif kind == "button":
            items.append(("button", rng.choice(("Read more", "Subscribe", "Share")), 40, y, 160, 44))
            y += 64
        elif kind == "banner":
            items.append(("banner", rng.choice(_COLORS), 0, y, VIEWPORT_W, 120))
            y += 140
        elif kind == "input":
            items.append(("input", "Search articles", 40, y, 360, 40))
            y += 60

    html = render_html(index, items, rng)
    snapshot = render_snapshot(items, y + 40)
    return html, snapshot


def render_html(index: int, items, rng: random.Random) -> str:
    body_parts = []
    for it in items:
        kind = it[0]
        wrap_open = (
            '<div class="section"><div class="row align-center"><div class="col-12">'
            '<div class="card shadow-sm"><div class="card-body">'
        )
        wrap_close = "</div></div></div></div></div>"
        if kind == "heading":
            inner = f'<h1 class="display-4 fw-bold text-gradient">{it[1]}</h1>'
        elif kind == "para":
            inner = f'<p class="lead text-muted mb-4">{it[1]}</p>'
        elif kind == "img":
            inner = f'<img class="img-fluid rounded" src="{it[1]}" alt="story image">'
        elif kind == "button":
            inner = f'<button class="btn btn-primary btn-lg px-4">{it[1]}</button>'
        elif kind == "banner":
            inner = f'<div class="banner hero-unit" style="background-color:{it[1]};height:120px"></div>'
        elif kind == "input":
            inner = f'<input class="form-control form-control-lg" type="text" placeholder="{it[1]}">'
        body_parts.append(wrap_open + inner + wrap_close)

    return f"""<!doctype html>
<html lang="en">
<head>
<meta charset="utf-8">
<meta name="viewport" content="width=device-width, initial-scale=1">
<title>Fixture page {index}</title>
<link rel="stylesheet" href="https://cdn.example.com/framework/5.3/bundle.min.css">
<link rel="stylesheet" href="https://fonts.example.com/css2?family=Inter:wght@400;700">
<link rel="preconnect" href="https://telemetry.example.com/collect">
<style>
{junk_css(rng, rng.randint(60, 110))}
</style>
<script src="https://cdn.example.com/analytics/v7/collector.min.js"></script>
<script src="https://cdn.example.com/framework/5.3/bundle.min.js"></script>
<script>
{junk_js(rng, rng.randint(30, 60))}
</script>
</head>
<body>
<div id="app"><div class="shell"><div class="layout-grid"><main class="content-area">
{chr(10).join(body_parts)}
</main></div></div></div>
<script>
{junk_js(rng, rng.randint(15, 30))}
</script>
</body>
</html>
"""


def render_snapshot(items, page_height: int) -> dict:
    counter = {"i": 0}

    def node(tag, rect, attrs=None, style=None, text="", children=()):
        counter["i"] += 1
        return {
            "tag": tag,
            "rect": {"x": rect[0], "y": rect[1], "w": rect[2], "h": rect[3]},
            "paint_index": counter["i"],
            "attrs": attrs or {},
            "style": style or {},
            "text": text,
            "children": list(children),
        }

    leaves = []
    for it in items:
        kind, payload, x, y, w, h = it
        # Leaves sit inside a transparent wrapper, as a browser capture of
        # the nested markup would record.
        if kind == "heading":
            leaf = node("h1", (x, y, w, h), style={
                "color": "rgb(20, 20, 20)", "fontFamily": "Inter, sans-serif",
                "fontSize": "40px", "fontWeight": "700", "textAlign": "left",
            }, text=payload)
        elif kind == "para":
            leaf = node("p", (x, y, w, h), style={
                "color": "rgb(60, 60, 60)", "fontFamily": "Inter, sans-serif",
                "fontSize": "18px",
            }, text=payload)
        elif kind == "img":
            leaf = node("img", (x, y, w, h),
                        attrs={"src": payload, "alt": "story image"},
                        style={"objectFit": "cover"})
        elif kind == "button":
            leaf = node("button", (x, y, w, h), text=payload,
                        style={"backgroundColor": "rgb(30, 90, 160)", "color": "rgb(255, 255, 255)"})
        elif kind == "banner":
            leaf = node("div", (x, y, w, h), style={"backgroundColor": payload})
        elif kind == "input":
            leaf = node("input", (x, y, w, h), attrs={"type": "text", "placeholder": payload},
                        style={"backgroundColor": "rgb(245, 245, 245)"})
        wrapper = node("div", (x, y, w, h), attrs={"class": "card-body"}, children=[leaf])
        # DFS order: wrapper first, then leaf; renumber below.
        leaves.append(wrapper)

    hidden = node("div", (0, 0, 300, 200), style={"displayKind": "none"},
                  children=[node("p", (0, 0, 300, 40), text="never shown")])
    main = node("main", (0, 0, VIEWPORT_W, page_height), children=leaves + [hidden])
    body = node("body", (0, 0, VIEWPORT_W, page_height), children=[main])

    # Renumber paint_index in DFS order.
    def renumber(n, start):
        n["paint_index"] = start
        start += 1
        for c in n["children"]:
            start = renumber(c, start)
        return start

    renumber(body, 1)
    return {
        "schema": 1,
        "viewport": {"width": VIEWPORT_W, "height": 800},
        "root": body,
    }


def main() -> None:
    OUT.mkdir(parents=True, exist_ok=True)
    for i in range(N_PAGES):
        html, snapshot = build_page(i)
        (OUT / f"page_{i:02d}.html").write_text(html, "utf-8")
        (OUT / f"page_{i:02d}.snapshot.json").write_text(
            json.dumps(snapshot, indent=1) + "\n", "utf-8"
        )
    print(f"wrote {N_PAGES} fixture pairs to {OUT}")


if __name__ == "__main__":
    main()
