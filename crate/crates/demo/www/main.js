import init, { formReport, census, sequence } from "./pkg/isotemporal_demo.js";

const $ = (id) => document.getElementById(id);

function call(fn, errorBox, ...args) {
  errorBox.textContent = "";
  try {
    return JSON.parse(fn(...args));
  } catch (e) {
    errorBox.textContent = String(e);
    return null;
  }
}

// Vertex v_k sits at angle -pi/2 + 2 pi k / n; edge e_k joins v_k and v_(k+1).
function drawPolygon(report) {
  const canvas = $("polygon");
  const ctx = canvas.getContext("2d");
  const n = report.n;
  const cx = canvas.width / 2, cy = canvas.height / 2, r = canvas.width * 0.36;
  const angle = (k) => -Math.PI / 2 + (2 * Math.PI * k) / n;
  const at = (a, rad = r) => [cx + rad * Math.cos(a), cy + rad * Math.sin(a)];
  ctx.clearRect(0, 0, canvas.width, canvas.height);

  const axis = (a, style, dash) => {
    const [x0, y0] = at(a, r * 1.25), [x1, y1] = at(a + Math.PI, r * 1.25);
    ctx.save();
    ctx.strokeStyle = style;
    ctx.setLineDash(dash);
    ctx.lineWidth = 1.5;
    ctx.beginPath(); ctx.moveTo(x0, y0); ctx.lineTo(x1, y1); ctx.stroke();
    ctx.restore();
  };
  const edgeAxis = (a) => angle(a) + Math.PI / n;
  const p = report.profile;
  p.mirror_edge_axes.forEach((a) => axis(edgeAxis(a), "#c22", []));
  p.skewed_mirror_edge_axes.forEach((a) => axis(edgeAxis(a), "#25c", [6, 5]));
  p.skewed_mirror_vertex_axes.forEach((i) => axis(angle(i), "#25c", [6, 5]));

  ctx.strokeStyle = "#222";
  ctx.lineWidth = 2;
  ctx.beginPath();
  for (let k = 0; k <= n; k++) {
    const [x, y] = at(angle(k));
    k === 0 ? ctx.moveTo(x, y) : ctx.lineTo(x, y);
  }
  ctx.stroke();

  ctx.textAlign = "center";
  ctx.textBaseline = "middle";
  for (let k = 0; k < n; k++) {
    const [x, y] = at(angle(k));
    ctx.fillStyle = "#222";
    ctx.beginPath(); ctx.arc(x, y, 4, 0, 2 * Math.PI); ctx.fill();
    const [lx, ly] = at(angle(k), r + 16);
    ctx.font = "12px system-ui";
    ctx.fillText(`v${k + 1}`, lx, ly);

    const mid = edgeAxis(k);
    const sign = report.form[k];
    const [sx, sy] = at(mid, r * Math.cos(Math.PI / n) - 18);
    ctx.font = "bold 18px monospace";
    ctx.fillStyle = sign === "+" ? "#c22" : sign === "-" ? "#25c" : "#888";
    ctx.fillText(sign, sx, sy);
    const [tx, ty] = at(mid, r * Math.cos(Math.PI / n) + 14);
    ctx.font = "12px monospace";
    ctx.fillStyle = "#555";
    ctx.fillText(`t=${report.ranks[k]}`, tx, ty);
  }
}

function showForm(text) {
  const report = call(formReport, $("form-error"), text);
  if (!report) return;
  drawPolygon(report);
  const p = report.profile;
  const list = (s) => (s.length ? s.join(" ") : "-");
  $("form-details").textContent = [
    `form ${report.form}  canonical ${report.canonical}  symmetry ${report.signature}`,
    `footprint {${report.footprint.join(",")}}  ranks ${report.ranks.join(" ")}`,
    `rotational folds ${list(p.rotational_folds)}  skewed rotational folds ${list(p.skewed_rotational_folds)}`,
    `negation isomorphic ${p.negation_isomorphic}`,
  ].join("\n");
}

function showCensus(n) {
  const rows = call(census, $("census-error"), n);
  $("census-list").textContent = "";
  if (!rows) return;
  const total = rows.reduce((a, r) => a + r.orbit, 0);
  $("census-summary").textContent = `${rows.length} classes covering ${total} forms. Click a form to draw it.`;
  const table = document.createElement("table");
  table.innerHTML = "<tr><th>form</th><th>orbit</th><th>symmetry</th></tr>";
  for (const r of rows) {
    const tr = table.insertRow();
    const cell = tr.insertCell();
    const a = document.createElement("a");
    a.href = "#";
    a.textContent = r.form;
    a.onclick = (e) => { e.preventDefault(); $("form-text").value = r.form; showForm(r.form); };
    cell.appendChild(a);
    tr.insertCell().textContent = r.orbit;
    tr.insertCell().textContent = r.signature;
  }
  $("census-list").appendChild(table);
}

function showSequence(from, to) {
  const rows = call(sequence, $("sequence-error"), BigInt(from), BigInt(to));
  const table = $("sequence-table");
  table.innerHTML = "<tr><th>n</th><th>closed formula</th><th>Burnside</th></tr>";
  if (!rows) return;
  for (const r of rows) {
    const tr = table.insertRow();
    for (const v of [r.n, r.formula, r.burnside]) tr.insertCell().textContent = v;
    if (r.formula !== r.burnside) tr.style.background = "#fee";
  }
}

await init();
$("form-input").onsubmit = (e) => { e.preventDefault(); showForm($("form-text").value); };
$("census-input").onsubmit = (e) => { e.preventDefault(); showCensus(Number($("census-n").value)); };
$("sequence-input").onsubmit = (e) => {
  e.preventDefault();
  showSequence(Number($("seq-from").value), Number($("seq-to").value));
};
showForm($("form-text").value);
showCensus(6);
showSequence(3, 20);
