/**
 * In-page runtime embedded by the transpiler: proportional width scaling,
 * event wiring primitives (show/hide/swap/valOf), and carousel controls.
 *
 * The page script calls MAML.init({w, wiring}) where `w` is the viewport
 * width the page was authored for and `wiring` is the listener table.
 * Exactly one global is created: window.MAML.
 */

export type ValueExpr = ["lit", string] | ["val", string];
export type Stmt =
  | ["show", string]
  | ["hide", string]
  | ["swap", ValueExpr, string];

export interface WiringEntry {
  event: "click" | "change" | "keydown" | "reach" | "timer";
  subject?: string;
  seconds?: number;
  key?: string;
  stmts: Stmt[];
}

export interface RuntimeConfig {
  w: number;
  wiring: WiringEntry[];
}

export interface MamlRuntime {
  init(cfg: RuntimeConfig): void;
  show(id: string): void;
  hide(id: string): void;
  swap(value: string, id: string): void;
  valOf(id: string): string;
  cnav(btn: Element, step: number): void;
}

interface AuthoredGeometry {
  el: HTMLElement;
  x: number;
  w: number;
}

export function installRuntime(win: Window & typeof globalThis): MamlRuntime {
  const doc = win.document;
  let cfg: RuntimeConfig = { w: 1, wiring: [] };
  // Captured once from the initial inline styles; every rescale derives
  // from these so repeated resizes never compound.
  let authored: AuthoredGeometry[] = [];
  const reached: Record<number, boolean> = {};

  const byId = (id: string) => doc.getElementById(id);
  const miss = (id: string) => console.warn("maml: no element with id " + id);

  function capture(): void {
    authored = [];
    const kids = doc.body.children;
    for (let i = 0; i < kids.length; i++) {
      const el = kids[i] as HTMLElement;
      if (el.tagName === "SCRIPT") continue;
      authored.push({
        el,
        x: parseFloat(el.style.left) || 0,
        w: parseFloat(el.style.width) || 0,
      });
    }
  }

  function rescale(): void {
    const s = win.innerWidth / cfg.w;
    for (const a of authored) {
      a.el.style.left = a.x * s + "px";
      a.el.style.width = a.w * s + "px";
    }
  }

  const M: MamlRuntime = {
    show(id) {
      const el = byId(id);
      if (!el) return miss(id);
      el.style.display = "";
    },
    hide(id) {
      const el = byId(id);
      if (!el) return miss(id);
      el.style.display = "none";
    },
    valOf(id) {
      const el = byId(id);
      if (!el) {
        miss(id);
        return "";
      }
      return "value" in el ? (el as HTMLInputElement).value : el.textContent || "";
    },
    swap(value, id) {
      const el = byId(id);
      if (!el) return miss(id);
      const t = el.tagName;
      if (t === "INPUT" || t === "SELECT" || t === "TEXTAREA") {
        (el as HTMLInputElement).value = value;
      } else {
        el.textContent = value;
      }
    },
    cnav(btn, step) {
      const box = btn.parentElement;
      if (!box) return;
      const imgs: HTMLElement[] = [];
      for (let i = 0; i < box.children.length; i++) {
        if (box.children[i].tagName === "IMG") imgs.push(box.children[i] as HTMLElement);
      }
      if (!imgs.length) return;
      let cur = 0;
      for (let i = 0; i < imgs.length; i++) {
        if (imgs[i].style.display !== "none") {
          cur = i;
          break;
        }
      }
      const next = (cur + step + imgs.length) % imgs.length;
      imgs[cur].style.display = "none";
      imgs[next].style.display = "";
    },
    init(c) {
      cfg = c;
      const start = () => {
        capture();
        rescale();
        bind();
        checkReach();
      };
      if (doc.readyState === "complete") start();
      else win.addEventListener("load", start);
      win.addEventListener("resize", rescale);
      win.addEventListener("scroll", checkReach);
    },
  };

  function evalValue(v: ValueExpr): string {
    return v[0] === "lit" ? v[1] : M.valOf(v[1]);
  }

  // Statements run in order; one failure skips only that statement.
  function run(stmts: Stmt[]): void {
    for (const s of stmts) {
      try {
        if (s[0] === "show") M.show(s[1]);
        else if (s[0] === "hide") M.hide(s[1]);
        else if (s[0] === "swap") M.swap(evalValue(s[1]), s[2]);
      } catch (e) {
        console.warn(e);
      }
    }
  }

  // reach: fires when the authored top edge first enters the viewport,
  // at most once per entry per page load.
  function checkReach(): void {
    const bottom = (win.scrollY || 0) + win.innerHeight;
    cfg.wiring.forEach((e, i) => {
      if (e.event !== "reach" || reached[i]) return;
      const el = byId(e.subject!);
      if (!el) return;
      if (bottom > (parseFloat((el as HTMLElement).style.top) || 0)) {
        reached[i] = true;
        run(e.stmts);
      }
    });
  }

  function bind(): void {
    for (const e of cfg.wiring) {
      if (e.event === "timer") {
        win.setInterval(() => run(e.stmts), (e.seconds || 0) * 1000);
        continue;
      }
      if (e.event === "reach") continue;
      const el = byId(e.subject!);
      if (!el) {
        miss(e.subject!);
        continue;
      }
      if (e.event === "keydown") {
        el.addEventListener("keydown", (ev) => {
          if ((ev as KeyboardEvent).key === e.key) run(e.stmts);
        });
      } else {
        el.addEventListener(e.event, () => run(e.stmts));
      }
    }
  }

  (win as unknown as { MAML: MamlRuntime }).MAML = M;
  return M;
}
