import init, { family_curves, analyze, alpha, family_graph } from "./pkg/signed_spectra_wasm.js";

const COLORS = ["#1b6ac9", "#d9480f", "#2b8a3e", "#862e9c", "#c92a2a"];
const $ = (id) => document.getElementById(id);

function fmt(x) {
  return Number.isFinite(x) ? x.toPrecision(12).replace(/\.?0+(e|$)/, "$1") : String(x);
}

function call(f, out) {
  try {
    out.classList.remove("err");
    return JSON.parse(f());
  } catch (e) {
    out.classList.add("err");
    out.textContent = String(e.message ?? e);
    return null;
  }
}

function plot() {
  const msg = $("c-msg");
  const data = call(() => family_curves(Number($("c-lo").value), Number($("c-hi").value)), msg);
  if (!data) return;
  msg.textContent = "";
  const diff = $("c-diff").checked;
  const series = diff ? data.series.map((s) => s.map((y, k) => y - data.series[4][k])) : data.series;
  const canvas = $("c-canvas");
  const ctx = canvas.getContext("2d");
  const W = canvas.width, H = canvas.height, pad = 60;
  ctx.clearRect(0, 0, W, H);
  const xs = data.n;
  const ys = series.flat();
  const [x0, x1] = [xs[0], xs[xs.length - 1] === xs[0] ? xs[0] + 1 : xs[xs.length - 1]];
  let [y0, y1] = [Math.min(...ys), Math.max(...ys)];
  if (y1 - y0 < 1e-12) y1 = y0 + 1;
  const px = (x) => pad + ((x - x0) / (x1 - x0)) * (W - 2 * pad);
  const py = (y) => H - pad + (-(y - y0) / (y1 - y0)) * (H - 2 * pad);
  ctx.strokeStyle = "#999";
  ctx.fillStyle = "#444";
  ctx.font = "13px system-ui";
  ctx.strokeRect(pad, pad, W - 2 * pad, H - 2 * pad);
  for (let i = 0; i <= 4; i++) {
    const y = y0 + ((y1 - y0) * i) / 4;
    ctx.fillText(y.toPrecision(4), 4, py(y) + 4);
    const x = Math.round(x0 + ((x1 - x0) * i) / 4);
    ctx.fillText(String(x), px(x) - 8, H - pad + 18);
  }
  series.forEach((s, i) => {
    ctx.strokeStyle = COLORS[i];
    ctx.beginPath();
    s.forEach((y, k) => (k ? ctx.lineTo(px(xs[k]), py(y)) : ctx.moveTo(px(xs[k]), py(y))));
    ctx.stroke();
  });
  $("c-legend").innerHTML = COLORS.map((c, i) => `<span style="color:${c}">■ Γ<sub>${i + 1}</sub></span>`).join("");
  const last = xs.length - 1;
  msg.textContent = `n = ${xs[last]}: ` + data.series.map((s, i) => `λ(Γ${i + 1}) = ${fmt(s[last])}`).join(", ");
}

function runAnalyze() {
  const out = $("a-out");
  const r = call(() => analyze($("a-text").value), out);
  if (!r) return;
  const bal = r.balance.balanced
    ? `balanced, switching ${r.balance.switching}`
    : `unbalanced, negative cycle ${r.balance.cycle.join(" ")}`;
  out.textContent = [
    `n = ${r.n}, m = ${r.m}` + (r.bicyclic ? `, bicyclic base ${r.bicyclic}` : ""),
    `index: ${fmt(r.index)}`,
    `spectrum: ${r.spectrum.map(fmt).join(" ")}`,
    `charpoly: ${r.charpoly}`,
    `coefficients (constant first): ${r.coefficients}`,
    bal,
  ].join("\n");
}

function runAlpha() {
  const out = $("t-out");
  const r = call(() => alpha($("t-text").value, Number($("t-u").value), Number($("t-v").value)), out);
  if (!r) return;
  out.textContent = [
    `before (λ = ${fmt(r.lambda_before)}):`,
    r.before.trim(),
    ``,
    `after (λ = ${fmt(r.lambda_after)}):`,
    r.after.trim(),
    ``,
    `hypothesis: ${r.hypothesis}`,
    `index did not decrease: ${r.monotone}`,
    `guarantee held: ${r.guarantee_held}`,
  ].join("\n");
}

await init();
$("c-go").onclick = plot;
$("a-go").onclick = runAnalyze;
$("t-go").onclick = runAlpha;
$("a-fam").onchange = () => {
  const which = Number($("a-fam").value);
  if (!which) return;
  try {
    $("a-text").value = family_graph(which, Number($("a-n").value));
    runAnalyze();
  } catch (e) {
    $("a-out").textContent = String(e.message ?? e);
  }
};
plot();
runAnalyze();
runAlpha();
