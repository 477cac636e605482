/**
 * Full-pipeline check against the reference toolchain CLI: a source page is
 * transpiled to HTML, the extractor snapshots the rendered DOM, and the
 * snapshot is translated back. Element kinds must survive the loop and
 * geometry must agree within 1 CSS pixel.
 */

import { execFileSync } from "node:child_process";
import { mkdtempSync, readFileSync, rmSync, writeFileSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";
import { fileURLToPath } from "node:url";

import Ajv from "ajv";
import { JSDOM } from "jsdom";
import { afterAll, describe, expect, it } from "vitest";

import { capture, captureToJson } from "../src/extractor";
import { setViewport, shimRects, shimScroll } from "./helpers";

const schemaPath = fileURLToPath(new URL("../schema/snapshot.schema.json", import.meta.url));
const validateSnapshot = new Ajv().compile(JSON.parse(readFileSync(schemaPath, "utf-8")));

const SOURCE_MAML = [
  '{"viewport_width":1200}',
  '{"type":"text","x":40,"y":24,"z":0,"w":500,"h":52,"display":true,"color":"#111111","fontSize":42,"id":"headline","text":"Hello, flat web"}',
  '{"type":"shape","x":0,"y":90,"z":1,"w":1200,"h":4,"display":true,"backgroundColor":"#336699","id":"rule"}',
  '{"type":"img","x":40,"y":120,"z":2,"w":640,"h":360,"display":true,"alt":"lead","fit":"cover","id":"lead","src":"https://media.example.com/lead.webp"}',
  '{"type":"button","x":40,"y":520,"z":3,"w":180,"h":48,"display":true,"id":"cta","text":"Read more"}',
  '{"type":"text-field","x":260,"y":520,"z":4,"w":240,"h":48,"display":true,"id":"search","placeholder":"Search"}',
  '{"type":"dropdown","x":540,"y":520,"z":5,"w":160,"h":48,"display":true,"id":"pick","options":["One","Two"]}',
  '{"type":"video","x":40,"y":600,"z":6,"w":640,"h":360,"display":true,"id":"clip","src":"https://media.example.com/clip.mp4"}',
  "",
].join("\n");

interface MamlLine {
  type: string;
  x: number;
  y: number;
  w: number;
  h: number;
  [key: string]: unknown;
}

function parseMaml(text: string): MamlLine[] {
  return text
    .split("\n")
    .filter((line) => line.trim())
    .slice(1) // header
    .map((line) => JSON.parse(line) as MamlLine);
}

function cli(args: string[]): void {
  execFileSync("python3", ["-m", "maml.cli", ...args], { stdio: "pipe" });
}

const workdir = mkdtempSync(join(tmpdir(), "maml-roundtrip-"));
afterAll(() => rmSync(workdir, { recursive: true, force: true }));

describe("translate → transpile → extract → translate", () => {
  it("preserves kinds and geometry within 1px", async () => {
    const srcPath = join(workdir, "page.maml");
    const htmlPath = join(workdir, "page.html");
    const snapPath = join(workdir, "page.snapshot.json");
    const outPath = join(workdir, "roundtrip.maml");

    writeFileSync(srcPath, SOURCE_MAML);
    cli(["transpile", srcPath, "-o", htmlPath]);

    const dom = new JSDOM(readFileSync(htmlPath, "utf-8"));
    const win = dom.window as unknown as Window & typeof globalThis;
    setViewport(win, 1200, 800);
    shimRects(win);
    shimScroll(win);

    const snap = await capture(win, { settleDelayMs: 0 });
    expect(validateSnapshot(JSON.parse(captureToJson(snap)))).toBe(true);
    writeFileSync(snapPath, captureToJson(snap));
    cli(["translate", snapPath, "-o", outPath]);

    const original = parseMaml(SOURCE_MAML);
    const recovered = parseMaml(readFileSync(outPath, "utf-8"));
    expect(recovered.length).toBe(original.length);
    for (let i = 0; i < original.length; i++) {
      const a = original[i];
      const b = recovered[i];
      expect(b.type, `element ${i}`).toBe(a.type);
      for (const axis of ["x", "y", "w", "h"] as const) {
        expect(Math.abs(b[axis] - a[axis]), `element ${i} ${axis}`).toBeLessThanOrEqual(1);
      }
    }
  });

  it("round-tripped ids and key content survive", async () => {
    const recovered = parseMaml(readFileSync(join(workdir, "roundtrip.maml"), "utf-8"));
    const byId = new Map(recovered.map((el) => [el.id as string, el]));
    expect(byId.get("headline")?.text).toBe("Hello, flat web");
    expect(byId.get("cta")?.text).toBe("Read more");
    expect(byId.get("lead")?.src).toBe("https://media.example.com/lead.webp");
    expect(byId.get("pick")?.options).toEqual(["One", "Two"]);
    expect(byId.get("search")?.placeholder).toBe("Search");
  });
});
