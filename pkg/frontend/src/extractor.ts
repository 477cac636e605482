/**
 * Layout-snapshot extractor: walks a rendered document and emits the
 * schema-v1 snapshot JSON consumed by the translator.
 *
 * The page is first scrolled to the bottom in viewport-height steps (with a
 * settle delay so lazy-loaded content appears), then back to the top, so
 * recorded rects are in page coordinates of the fully-loaded page.
 */

export interface Rect {
  x: number;
  y: number;
  w: number;
  h: number;
}

export interface StyleSubset {
  backgroundColor?: string;
  borderRadius?: string;
  color?: string;
  fontFamily?: string;
  fontSize?: string;
  fontStyle?: string;
  fontWeight?: string;
  textAlign?: string;
  zIndex?: string;
  displayKind?: string;
  visibility?: string;
  objectFit?: string;
}

export interface SnapshotNode {
  tag: string;
  rect: Rect;
  paint_index: number;
  attrs: Record<string, string>;
  style: StyleSubset;
  text: string;
  children: SnapshotNode[];
}

export interface Snapshot {
  schema: 1;
  viewport: { width: number; height: number };
  root: SnapshotNode;
}

export interface CaptureOptions {
  /** Pause after each scroll step, giving lazy content time to load. */
  settleDelayMs?: number;
  /** Scroll increment; defaults to the viewport height. */
  scrollStep?: number;
}

const STYLE_KEYS: [keyof StyleSubset, string][] = [
  ["backgroundColor", "background-color"],
  ["borderRadius", "border-radius"],
  ["color", "color"],
  ["fontFamily", "font-family"],
  ["fontSize", "font-size"],
  ["fontStyle", "font-style"],
  ["fontWeight", "font-weight"],
  ["textAlign", "text-align"],
  ["zIndex", "z-index"],
  ["visibility", "visibility"],
  ["objectFit", "object-fit"],
];

const ATTR_KEYS = ["id", "alt", "placeholder", "href", "type", "value"];

const sleep = (ms: number) => new Promise<void>((r) => setTimeout(r, ms));

/** Text of the element's direct text-node children, whitespace-collapsed. */
function ownText(el: Element): string {
  let out = "";
  for (const child of Array.from(el.childNodes)) {
    if (child.nodeType === 3 /* TEXT_NODE */) out += child.textContent || "";
  }
  return out.replace(/\s+/g, " ").trim();
}

function pickAttrs(el: Element): Record<string, string> {
  const attrs: Record<string, string> = {};
  for (const key of ATTR_KEYS) {
    const v = el.getAttribute(key);
    if (v !== null && v !== "") attrs[key] = v;
  }
  // Prefer the resolved source (srcset/lazy loading) over the raw attribute.
  const current = (el as HTMLImageElement).currentSrc || el.getAttribute("src");
  if (current) attrs.src = current;
  return attrs;
}

function pickStyle(win: Window, el: Element): StyleSubset {
  const cs = win.getComputedStyle(el);
  const inline = (el as HTMLElement).style;
  const style: StyleSubset = {};
  for (const [key, cssName] of STYLE_KEYS) {
    const v = cs.getPropertyValue(cssName) || (inline && inline.getPropertyValue(cssName));
    if (v) style[key] = v;
  }
  const display = cs.getPropertyValue("display") || (inline && inline.getPropertyValue("display"));
  if (display) style.displayKind = display;
  return style;
}

function pageRect(win: Window, el: Element): Rect {
  const r = el.getBoundingClientRect();
  return {
    x: Math.round(r.left + win.scrollX),
    y: Math.round(r.top + win.scrollY),
    w: Math.round(r.width),
    h: Math.round(r.height),
  };
}

function isCrossOriginFrame(el: Element): boolean {
  if (el.tagName !== "IFRAME") return false;
  try {
    // Throws (or is null) when the frame document is cross-origin.
    return (el as HTMLIFrameElement).contentDocument === null;
  } catch {
    return true;
  }
}

function walk(win: Window, el: Element, counter: { n: number }): SnapshotNode {
  const node: SnapshotNode = {
    tag: el.tagName.toLowerCase(),
    rect: pageRect(win, el),
    paint_index: counter.n++,
    attrs: pickAttrs(el),
    style: pickStyle(win, el),
    text: ownText(el),
    children: [],
  };
  if (isCrossOriginFrame(el)) {
    // Content is unreadable: record the frame as one opaque shape-like
    // box and flag it so downstream tooling can surface a warning.
    node.attrs.warning = "cross-origin-frame";
    if (!node.style.backgroundColor) node.style.backgroundColor = "#cccccc";
    return node;
  }
  for (const child of Array.from(el.children)) {
    if (child.tagName === "SCRIPT" || child.tagName === "STYLE") continue;
    node.children.push(walk(win, child, counter));
  }
  return node;
}

async function settleScroll(win: Window, opts: CaptureOptions): Promise<void> {
  const delay = opts.settleDelayMs ?? 500;
  const step = opts.scrollStep ?? win.innerHeight;
  const limit = win.document.body.scrollHeight;
  for (let y = 0; y < limit; y += Math.max(step, 1)) {
    win.scrollTo(0, y);
    await sleep(delay);
  }
  win.scrollTo(0, 0);
  await sleep(delay);
}

export async function capture(
  win: Window & typeof globalThis,
  opts: CaptureOptions = {},
): Promise<Snapshot> {
  await settleScroll(win, opts);
  return {
    schema: 1,
    viewport: { width: win.innerWidth, height: win.innerHeight },
    root: walk(win, win.document.body, { n: 1 }),
  };
}

export function captureToJson(snapshot: Snapshot): string {
  return JSON.stringify(snapshot);
}
