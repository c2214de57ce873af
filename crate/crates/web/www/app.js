import init, { sequence, expand, verify } from "./pkg/bellforge_web.js";

const $ = (id) => document.getElementById(id);

function guard(outId, fn) {
  try {
    fn();
  } catch (e) {
    const out = $(outId);
    out.textContent = String(e.message ?? e);
    out.classList.add("error");
  }
}

// Values can exceed 2^53, so the chart plots log10 from the decimal string.
function log10(decimal) {
  const digits = decimal.replace("-", "");
  if (digits === "0") return null;
  const head = Number(digits.slice(0, 15));
  return Math.log10(head) + Math.max(0, digits.length - 15);
}

function drawChart(canvas, values) {
  const ctx = canvas.getContext("2d");
  const { width, height } = canvas;
  ctx.clearRect(0, 0, width, height);
  const points = values.map(([n, v]) => [n, log10(v)]);
  const ys = points.map(([, y]) => y).filter((y) => y !== null);
  const maxN = Math.max(1, points.length - 1);
  const maxY = Math.max(1, ...ys);
  const pad = 28;
  const x = (n) => pad + (n / maxN) * (width - 2 * pad);
  const y = (v) => height - pad - (v / maxY) * (height - 2 * pad);

  ctx.strokeStyle = "#999";
  ctx.beginPath();
  ctx.moveTo(pad, pad);
  ctx.lineTo(pad, height - pad);
  ctx.lineTo(width - pad, height - pad);
  ctx.stroke();
  ctx.fillStyle = "#555";
  ctx.font = "12px sans-serif";
  ctx.fillText(`log10 value (max ${maxY.toFixed(1)})`, pad + 4, pad - 8);
  ctx.fillText(`n = ${maxN}`, width - pad - 40, height - 8);

  ctx.fillStyle = "#1f5fbf";
  for (const [n, v] of points) {
    if (v === null) continue;
    ctx.beginPath();
    ctx.arc(x(n), y(v), 2.5, 0, 2 * Math.PI);
    ctx.fill();
  }
}

function runSequence() {
  const out = $("seq-out");
  out.classList.remove("error");
  guard("seq-out", () => {
    const report = JSON.parse(sequence($("seq-name").value, Number($("seq-max").value), $("seq-parts").value));
    out.textContent = report.values.map(([n, v]) => `${n}\t${v}`).join("\n");
    drawChart($("seq-chart"), report.values);
  });
}

function runExpand() {
  const out = $("eval-out");
  const status = $("eval-status");
  out.classList.remove("error");
  status.textContent = "";
  guard("eval-out", () => {
    const result = JSON.parse(expand($("eval-spec").value, Number($("eval-max").value)));
    out.textContent = ["n\tpartition sum\tseries"]
      .concat(result.rows.map((r) => `${r.n}\t${r.faa ?? "(past cap)"}\t${r.series}${r.agree ? "" : "\tMISMATCH"}`))
      .join("\n");
    status.className = result.agree ? "pass" : "fail";
    status.textContent = result.agree
      ? `both methods agree (partition sums up to n = ${result.faa_cap})`
      : "methods disagree";
  });
}

function runVerify() {
  const out = $("verify-out");
  const status = $("verify-status");
  out.classList.remove("error");
  status.textContent = "";
  guard("verify-out", () => {
    const report = JSON.parse(verify($("verify-name").value, Number($("verify-max").value)));
    const failed = report.verdicts.filter((v) => !v.pass).length;
    out.textContent = report.verdicts
      .map((v) => `${v.pass ? "PASS" : "FAIL"} ${v.check}: ${v.details}`)
      .join("\n");
    status.className = failed === 0 ? "pass" : "fail";
    status.textContent = `${report.verdicts.length} checks, ${failed} failed`;
  });
}

await init();
$("seq-run").addEventListener("click", runSequence);
$("eval-run").addEventListener("click", runExpand);
$("verify-run").addEventListener("click", runVerify);
runSequence();
