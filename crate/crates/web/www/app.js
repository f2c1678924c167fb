import init, { analyze, simulate, deutsch_jozsa } from "./pkg/exact1q_web.js";

const $ = (id) => document.getElementById(id);
const cycle = { "0": "1", "1": "*", "*": "0" };
let table = "0110";

function bits(n, x) {
  return x.toString(2).padStart(n, "0");
}

function drawGrid() {
  const n = Math.log2(table.length);
  const grid = $("grid");
  grid.innerHTML = "";
  const head = grid.insertRow();
  for (let i = 1; i <= n; i++) head.appendChild(cell("th", `x${i}`));
  head.appendChild(cell("th", "f"));
  [...table].forEach((v, x) => {
    const row = grid.insertRow();
    for (const b of bits(n, x)) row.appendChild(cell("td", b));
    const out = cell("td", v);
    out.className = `out v${v === "*" ? "star" : v}`;
    out.onclick = () => {
      table = table.slice(0, x) + cycle[v] + table.slice(x + 1);
      update();
    };
    row.appendChild(out);
  });
}

function cell(tag, text) {
  const c = document.createElement(tag);
  c.textContent = text;
  return c;
}

function fact(dl, term, value, cls) {
  dl.appendChild(cell("dt", term));
  const d = cell("dd", value);
  if (cls) d.className = cls;
  dl.appendChild(d);
}

function describe(cl) {
  switch (cl.kind) {
    case "constant": return `constant ${cl.value}`;
    case "dictator": return `${cl.negated ? "NOT " : ""}x${cl.i}`;
    case "parity_pair": return `${cl.negated ? "NOT " : ""}(x${cl.i} XOR x${cl.j})`;
    default: return cl.reason === "depends_on_too_many"
      ? `not exact with one query: depends on ${cl.dependent_count} variables`
      : "not exact with one query: AND-type on two variables";
  }
}

function drawAnalysis() {
  const a = JSON.parse(analyze(table));
  const dl = $("facts");
  dl.innerHTML = "";
  $("tree").textContent = "";
  if (a.error) {
    fact(dl, "error", a.error, "error");
    return;
  }
  if (a.classification) {
    const ok = a.classification.kind !== "not_exact_one_query";
    fact(dl, "classification", describe(a.classification), ok ? "yes" : "no");
    fact(dl, "depends on", a.dependent_set.map((i) => `x${i}`).join(", ") || "nothing");
  } else {
    fact(dl, "classification", "partial function: only simulated, not classified");
  }
  fact(dl, "classical D(f)", String(a.depth));
  if (a.feasibility) {
    const fe = a.feasibility;
    fact(dl, "distinguishing sets", fe.sets.map((s) => `{${s.join(",")}}`).join(" "));
    fact(dl, "amplitude constraints", fe.feasible ? "feasible" : "infeasible", fe.feasible ? "yes" : "no");
    if (fe.witness) fact(dl, "witness beta", `(${fe.witness.join(", ")})`);
    if (fe.certificate) {
      const y = fe.certificate.set_multipliers.map(([p, q]) => (q === 1 ? `${p}` : `${p}/${q}`));
      const [lp, lq] = fe.certificate.cap_multiplier;
      fact(dl, "certificate", `y = (${y.join(", ")}), cap ${lq === 1 ? lp : `${lp}/${lq}`}`);
    }
  }
  $("tree").textContent = "optimal decision tree\n" + showTree(a.tree, "");
}

function showTree(t, indent) {
  if ("leaf" in t) return `${indent}${t.leaf}\n`;
  return `${indent}x${t.var}?\n${indent}  0:\n${showTree(t.lo, indent + "    ")}${indent}  1:\n${showTree(t.hi, indent + "    ")}`;
}

function drawBars(target, inputs) {
  target.innerHTML = "";
  for (const r of inputs) {
    const row = document.createElement("div");
    row.className = "bar";
    row.appendChild(cell("span", r.x));
    row.appendChild(cell("span", `f=${r.f}`));
    const track = document.createElement("div");
    track.className = "track";
    const fill = document.createElement("div");
    fill.className = "fill";
    fill.style.width = `${(100 * r.p1.value).toFixed(2)}%`;
    track.appendChild(fill);
    row.appendChild(track);
    row.appendChild(cell("span", `P1=${r.p1.exact}`));
    target.appendChild(row);
  }
}

function drawSimulation() {
  const s = JSON.parse(simulate(table));
  const status = $("sim-status");
  status.className = "";
  if (s.error) {
    status.textContent = table.includes("*")
      ? "Circuits are synthesized for total tables only; try the constant-or-balanced demo below."
      : s.error;
    $("bars").innerHTML = "";
    return;
  }
  if (!s.circuit) {
    status.textContent = "No single-query circuit computes this function exactly.";
    status.className = "no";
    $("bars").innerHTML = "";
    return;
  }
  status.textContent = `Dimension ${s.dimension}, ${s.queries} query, exact: ${s.is_exact}. Bars show P[outcome 1].`;
  drawBars($("bars"), s.inputs);
}

function update() {
  $("table-text").value = table;
  $("nvars").value = String(Math.log2(table.length));
  drawGrid();
  drawAnalysis();
  drawSimulation();
}

await init();

$("nvars").onchange = (e) => {
  const n = Number(e.target.value);
  table = "0".repeat(2 ** n);
  $("preset").value = "";
  update();
};
$("preset").onchange = (e) => {
  if (e.target.value) {
    table = e.target.value;
    update();
  }
};
$("table-text").onchange = (e) => {
  const t = e.target.value.trim();
  if (/^[01*]+$/.test(t) && Number.isInteger(Math.log2(t.length)) && t.length <= 16) {
    table = t;
  }
  update();
};
for (const b of document.querySelectorAll("#dj button")) {
  b.onclick = () => {
    const r = JSON.parse(deutsch_jozsa(Number(b.dataset.n)));
    drawBars($("dj-bars"), r.inputs);
  };
}
update();
