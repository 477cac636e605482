/* MAML page runtime: proportional scaling, event wiring, carousel controls.
 * Exposes a single namespaced object, window.MAML. The transpiler appends
 * MAML.init({w: <original viewport width>, wiring: [...]}) after this file.
 */
(function () {
  "use strict";
  var M = {};
  var cfg = { w: 1, wiring: [] };
  var authored = [];
  var reached = {};

  function byId(id) { return document.getElementById(id); }
  function miss(id) { if (window.console) console.warn("maml: no element with id " + id); }

  /* Authored left/width are read once from the initial inline styles so
   * rescaling never compounds. */
  function capture() {
    authored = [];
    var kids = document.body.children;
    for (var i = 0; i < kids.length; i++) {
      var el = kids[i];
      if (el.tagName === "SCRIPT") continue;
      authored.push({
        el: el,
        x: parseFloat(el.style.left) || 0,
        w: parseFloat(el.style.width) || 0
      });
    }
  }

  function rescale() {
    var s = window.innerWidth / cfg.w;
    for (var i = 0; i < authored.length; i++) {
      var a = authored[i];
      a.el.style.left = a.x * s + "px";
      a.el.style.width = a.w * s + "px";
    }
  }

  M.show = function (id) {
    var el = byId(id);
    if (!el) return miss(id);
    el.style.display = "";
  };

  M.hide = function (id) {
    var el = byId(id);
    if (!el) return miss(id);
    el.style.display = "none";
  };

  M.valOf = function (id) {
    var el = byId(id);
    if (!el) { miss(id); return ""; }
    return "value" in el ? el.value : el.textContent;
  };

  M.swap = function (v, id) {
    var el = byId(id);
    if (!el) return miss(id);
    var t = el.tagName;
    if (t === "INPUT" || t === "SELECT" || t === "TEXTAREA") el.value = v;
    else el.textContent = v;
  };

  function evalValue(v) { return v[0] === "lit" ? v[1] : M.valOf(v[1]); }

  /* Statements run sequentially; a failing statement is skipped and the
   * rest of the body still runs. */
  function run(stmts) {
    for (var i = 0; i < stmts.length; i++) {
      var s = stmts[i];
      try {
        if (s[0] === "show") M.show(s[1]);
        else if (s[0] === "hide") M.hide(s[1]);
        else if (s[0] === "swap") M.swap(evalValue(s[1]), s[2]);
      } catch (e) {
        if (window.console) console.warn(e);
      }
    }
  }

  /* reach: fires when the authored top edge first enters the viewport,
   * at most once per entry per page load. */
  function checkReach() {
    var bottom = (window.scrollY || window.pageYOffset || 0) + window.innerHeight;
    for (var i = 0; i < cfg.wiring.length; i++) {
      var e = cfg.wiring[i];
      if (e.event !== "reach" || reached[i]) continue;
      var el = byId(e.subject);
      if (!el) continue;
      if (bottom > (parseFloat(el.style.top) || 0)) {
        reached[i] = true;
        run(e.stmts);
      }
    }
  }

  function bind() {
    for (var i = 0; i < cfg.wiring.length; i++) (function (e) {
      if (e.event === "timer") {
        setInterval(function () { run(e.stmts); }, e.seconds * 1000);
        return;
      }
      if (e.event === "reach") return;
      var el = byId(e.subject);
      if (!el) return miss(e.subject);
      if (e.event === "keydown") {
        el.addEventListener("keydown", function (ev) { if (ev.key === e.key) run(e.stmts); });
      } else {
        el.addEventListener(e.event, function () { run(e.stmts); });
      }
    })(cfg.wiring[i]);
  }

  /* Carousel controls call MAML.cnav(this, +-1); the visible image cycles
   * with wrap-around inside the control's parent container. */
  M.cnav = function (btn, step) {
    var box = btn.parentElement;
    var imgs = [];
    var i;
    for (i = 0; i < box.children.length; i++) {
      if (box.children[i].tagName === "IMG") imgs.push(box.children[i]);
    }
    if (!imgs.length) return;
    var cur = 0;
    for (i = 0; i < imgs.length; i++) {
      if (imgs[i].style.display !== "none") { cur = i; break; }
    }
    var next = (cur + step + imgs.length) % imgs.length;
    imgs[cur].style.display = "none";
    imgs[next].style.display = "";
  };

  M.init = function (c) {
    cfg = c;
    function start() { capture(); rescale(); bind(); checkReach(); }
    if (document.readyState === "complete") start();
    else window.addEventListener("load", start);
    window.addEventListener("resize", rescale);
    window.addEventListener("scroll", checkReach);
  };

  window.MAML = M;
})();
