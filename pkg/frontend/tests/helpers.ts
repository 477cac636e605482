/** Shared jsdom helpers: jsdom has no layout engine, so tests derive
 * geometry from inline styles and drive viewport/scroll state directly. */

export function setViewport(win: Window, width: number, height: number): void {
  Object.defineProperty(win, "innerWidth", { value: width, configurable: true });
  Object.defineProperty(win, "innerHeight", { value: height, configurable: true });
}

export function setScroll(win: Window, x: number, y: number): void {
  Object.defineProperty(win, "scrollX", { value: x, configurable: true });
  Object.defineProperty(win, "scrollY", { value: y, configurable: true });
}

/** Make getBoundingClientRect report the inline left/top/width/height. */
export function shimRects(win: Window & typeof globalThis): void {
  win.Element.prototype.getBoundingClientRect = function (this: Element): DOMRect {
    const st = (this as HTMLElement).style;
    const x = parseFloat(st.left) || 0;
    const y = parseFloat(st.top) || 0;
    const w = parseFloat(st.width) || 0;
    const h = parseFloat(st.height) || 0;
    return {
      x,
      y,
      left: x,
      top: y,
      width: w,
      height: h,
      right: x + w,
      bottom: y + h,
      toJSON: () => ({}),
    } as DOMRect;
  };
}

/** Replace the no-op jsdom scrollTo with one that records scrollX/scrollY. */
export function shimScroll(win: Window, log?: Array<[number, number]>): void {
  const scrollTo = (x: number, y: number) => {
    log?.push([x, y]);
    setScroll(win, x, y);
  };
  Object.defineProperty(win, "scrollTo", { value: scrollTo, configurable: true });
}
