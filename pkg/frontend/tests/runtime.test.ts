// @vitest-environment jsdom
import { afterEach, describe, expect, it, vi } from "vitest";

import { installRuntime, type RuntimeConfig } from "../src/runtime";
import { setScroll, setViewport } from "./helpers";

function initPage(html: string, cfg: RuntimeConfig) {
  document.body.innerHTML = html;
  const rt = installRuntime(window);
  rt.init(cfg);
  if (document.readyState !== "complete") {
    window.dispatchEvent(new Event("load"));
  }
  return rt;
}

afterEach(() => {
  document.body.innerHTML = "";
  setViewport(window, 1024, 768);
  setScroll(window, 0, 0);
  vi.useRealTimers();
});

describe("click wiring", () => {
  it("runs the three-statement click example end to end", () => {
    setViewport(window, 1200, 800);
    initPage(
      `
      <button id="button1" style="position:absolute;left:40px;top:40px;width:100px;height:30px">Go</button>
      <img id="image1" style="position:absolute;left:0px;top:100px;width:50px;height:50px" src="a.png">
      <img id="image2" style="position:absolute;left:0px;top:100px;width:50px;height:50px;display:none" src="b.png">
      <input id="input3" style="position:absolute;left:0px;top:200px;width:80px;height:20px">
      <div id="text3" style="position:absolute;left:0px;top:240px;width:80px;height:20px">old</div>
      `,
      {
        w: 1200,
        wiring: [
          {
            event: "click",
            subject: "button1",
            stmts: [
              ["show", "image2"],
              ["hide", "image1"],
              ["swap", ["val", "input3"], "text3"],
            ],
          },
        ],
      },
    );
    (document.getElementById("input3") as HTMLInputElement).value = "typed";
    document.getElementById("button1")!.click();
    expect(document.getElementById("image2")!.style.display).toBe("");
    expect(document.getElementById("image1")!.style.display).toBe("none");
    expect(document.getElementById("text3")!.textContent).toBe("typed");
  });

  it("a missing statement target does not abort the rest", () => {
    initPage(
      `<button id="b" style="left:0px;width:10px">x</button>
       <div id="t" style="left:0px;width:10px">old</div>`,
      {
        w: 1024,
        wiring: [
          {
            event: "click",
            subject: "b",
            stmts: [
              ["hide", "no-such-id"],
              ["swap", ["lit", "new"], "t"],
            ],
          },
        ],
      },
    );
    document.getElementById("b")!.click();
    expect(document.getElementById("t")!.textContent).toBe("new");
  });
});

describe("proportional rescale", () => {
  const html = `
    <div id="a" style="position:absolute;left:336px;top:15px;width:268px;height:31px"></div>
    <div id="b" style="position:absolute;left:0px;top:200px;width:1200px;height:40px"></div>
  `;

  it("halving the viewport halves left and width, leaving top alone", () => {
    setViewport(window, 1200, 800);
    initPage(html, { w: 1200, wiring: [] });
    setViewport(window, 600, 800);
    window.dispatchEvent(new Event("resize"));
    const a = document.getElementById("a")!;
    expect(a.style.left).toBe("168px");
    expect(a.style.width).toBe("134px");
    expect(a.style.top).toBe("15px");
    expect(document.getElementById("b")!.style.width).toBe("600px");
  });

  it("rescale is idempotent and reversible from authored values", () => {
    setViewport(window, 1200, 800);
    initPage(html, { w: 1200, wiring: [] });
    for (const width of [600, 600, 300, 1200]) {
      setViewport(window, width, 800);
      window.dispatchEvent(new Event("resize"));
    }
    const a = document.getElementById("a")!;
    expect(a.style.left).toBe("336px");
    expect(a.style.width).toBe("268px");
  });
});

describe("reach listener", () => {
  it("fires exactly once, on first entry into the viewport", () => {
    setViewport(window, 1024, 800);
    initPage(
      `<div id="deep" style="position:absolute;left:0px;top:1500px;width:10px;height:10px"></div>
       <input id="src" style="left:0px;top:0px;width:10px">
       <div id="out" style="left:0px;top:0px;width:10px"></div>`,
      {
        w: 1024,
        wiring: [
          { event: "reach", subject: "deep", stmts: [["swap", ["val", "src"], "out"]] },
        ],
      },
    );
    const src = document.getElementById("src") as HTMLInputElement;
    const out = document.getElementById("out")!;
    src.value = "first";
    expect(out.textContent).toBe(""); // top edge still below the fold

    setScroll(window, 0, 900);
    window.dispatchEvent(new Event("scroll"));
    expect(out.textContent).toBe("first");

    src.value = "second";
    setScroll(window, 0, 1200);
    window.dispatchEvent(new Event("scroll"));
    expect(out.textContent).toBe("first"); // did not fire again
  });
});

describe("keydown and timer listeners", () => {
  it("keydown runs only for the configured key", () => {
    initPage(
      `<input id="f" style="left:0px;width:10px">
       <div id="flag" style="left:0px;width:10px">no</div>`,
      {
        w: 1024,
        wiring: [
          { event: "keydown", subject: "f", key: "Enter", stmts: [["swap", ["lit", "yes"], "flag"]] },
        ],
      },
    );
    const f = document.getElementById("f")!;
    f.dispatchEvent(new KeyboardEvent("keydown", { key: "a" }));
    expect(document.getElementById("flag")!.textContent).toBe("no");
    f.dispatchEvent(new KeyboardEvent("keydown", { key: "Enter" }));
    expect(document.getElementById("flag")!.textContent).toBe("yes");
  });

  it("timer recurs every interval", () => {
    vi.useFakeTimers();
    initPage(
      `<div id="x" style="left:0px;width:10px;display:none"></div>
       <div id="y" style="left:0px;width:10px"></div>`,
      {
        w: 1024,
        wiring: [{ event: "timer", seconds: 2, stmts: [["show", "x"]] }],
      },
    );
    expect(document.getElementById("x")!.style.display).toBe("none");
    vi.advanceTimersByTime(2000);
    expect(document.getElementById("x")!.style.display).toBe("");
    document.getElementById("x")!.style.display = "none";
    vi.advanceTimersByTime(2000); // still wired after the first tick
    expect(document.getElementById("x")!.style.display).toBe("");
  });
});

describe("carousel navigation", () => {
  it("steps forward and wraps around", () => {
    initPage(
      `<div id="c" style="left:0px;width:100px">
         <img src="1.png" style="">
         <img src="2.png" style="display:none">
         <img src="3.png" style="display:none">
         <button id="next">&gt;</button>
       </div>`,
      { w: 1024, wiring: [] },
    );
    const rt = (window as unknown as { MAML: ReturnType<typeof installRuntime> }).MAML;
    const next = document.getElementById("next")!;
    const visible = () =>
      Array.from(document.querySelectorAll("#c img")).findIndex(
        (img) => (img as HTMLElement).style.display !== "none",
      );
    rt.cnav(next, 1);
    expect(visible()).toBe(1);
    rt.cnav(next, 1);
    rt.cnav(next, 1);
    expect(visible()).toBe(0); // wrapped
    rt.cnav(next, -1);
    expect(visible()).toBe(2); // wraps backwards too
  });
});

describe("globals", () => {
  it("exposes exactly one global, MAML", () => {
    const before = new Set(Object.getOwnPropertyNames(window));
    before.delete("MAML");
    installRuntime(window);
    const added = Object.getOwnPropertyNames(window).filter((n) => !before.has(n));
    expect(added).toEqual(["MAML"]);
  });
});
