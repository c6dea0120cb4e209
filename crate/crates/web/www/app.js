import init, { analyze, dualize, witness } from "./pkg/subfit_web.js";

const PRESETS = {
  intro: '{"n":6,"covers":[[0,1],[0,2],[0,3],[1,5],[2,5],[3,4],[4,5]],"labels":["0","a","b","t","s","1"]}',
  cube: '{"n":8,"covers":[[0,1],[0,2],[0,4],[1,3],[1,5],[2,3],[2,6],[3,7],[4,5],[4,6],[5,7],[6,7]],"labels":["0","x","y","xy","z","xz","yz","1"]}',
  "2x3 grid": '{"n":6,"covers":[[0,1],[0,3],[1,2],[1,4],[2,5],[3,4],[4,5]]}',
  M3: '{"n":5,"covers":[[0,1],[0,2],[0,3],[1,4],[2,4],[3,4]]}',
  N5: '{"n":5,"covers":[[0,1],[0,3],[1,2],[2,4],[3,4]]}',
};

const $ = (id) => document.getElementById(id);
const SVG = "http://www.w3.org/2000/svg";
const W = 400, H = 300, PAD = 30;

let analysis = null;
let dual = null;
let picks = [];

function el(name, attrs) {
  const e = document.createElementNS(SVG, name);
  for (const [k, v] of Object.entries(attrs)) e.setAttribute(k, v);
  return e;
}

function draw(svg, diagram, classOf, onClick) {
  svg.replaceChildren();
  const pos = (n) => [PAD + n.x * (W - 2 * PAD), PAD + n.y * (H - 2 * PAD)];
  for (const [a, b] of diagram.edges) {
    const [x1, y1] = pos(diagram.nodes[a]);
    const [x2, y2] = pos(diagram.nodes[b]);
    svg.append(el("line", { x1, y1, x2, y2 }));
  }
  for (const n of diagram.nodes) {
    const [cx, cy] = pos(n);
    const c = el("circle", { cx, cy, r: 9, class: classOf(n.index) });
    if (onClick) c.addEventListener("click", () => onClick(n.index));
    const t = el("text", { x: cx + 12, y: cy + 4 });
    t.textContent = n.label;
    svg.append(c, t);
  }
}

function show(value) {
  const out = $("output");
  out.className = "";
  out.textContent = JSON.stringify(value, null, 2);
}

function fail(err) {
  const out = $("output");
  out.className = "error";
  out.textContent = String(err.message ?? err);
}

function label(i) {
  return analysis ? analysis.diagram.nodes[i].label : String(i);
}

function redrawLattice(extra = {}) {
  if (!analysis) return;
  const subfit = new Set(analysis.subfit_elements);
  const picked = new Set(picks);
  draw($("lattice"), analysis.diagram, (i) => {
    if (i === extra.z) return "z";
    if (picked.has(i)) return "pick";
    return subfit.has(i) ? "subfit" : "";
  }, pickNode);
}

function redrawSpace(element) {
  if (!dual) {
    $("space").replaceChildren();
    return;
  }
  const closed = new Set(dual.closed_points);
  const open = new Set(element === undefined ? [] : dual.opens[element]);
  draw($("space"), dual.space, (i) =>
    [closed.has(i) ? "closed" : "", open.has(i) ? "open" : ""].join(" "));
}

function pickNode(i) {
  picks = picks.length >= 4 ? [i] : [...picks, i];
  ["a", "b", "s", "t"].forEach((k, j) => {
    $(k).value = j < picks.length ? "#" + picks[j] : "";
  });
  redrawLattice();
  redrawSpace(i);
}

function runAnalyze() {
  try {
    analysis = JSON.parse(analyze($("input").value));
    picks = [];
    dual = null;
    redrawLattice();
    redrawSpace();
    const { diagram, ...rest } = analysis;
    show({
      ...rest,
      subfit_elements: rest.subfit_elements.map(label),
      offending_pair: rest.offending_pair && rest.offending_pair.map(label),
      indistinguishable_pair: rest.indistinguishable_pair && rest.indistinguishable_pair.map(label),
    });
  } catch (e) {
    fail(e);
  }
}

function runDualize() {
  try {
    if (!analysis) runAnalyze();
    dual = JSON.parse(dualize($("input").value));
    redrawSpace();
    show({
      points: dual.point_elements.map(label),
      closed_points: dual.closed_points.map((k) => label(dual.point_elements[k])),
      round_trip: dual.round_trip,
    });
  } catch (e) {
    fail(e);
  }
}

function runWitness() {
  try {
    if (!analysis) runAnalyze();
    const [a, b, s, t] = ["a", "b", "s", "t"].map((k) => $(k).value);
    const w = JSON.parse(witness($("input").value, a, b, s, t));
    redrawLattice({ z: w.z });
    show({ ...w, z_label: label(w.z) });
  } catch (e) {
    fail(e);
  }
}

await init();
const select = $("preset");
for (const name of Object.keys(PRESETS)) select.append(new Option(name, name));
select.addEventListener("change", () => {
  $("input").value = PRESETS[select.value];
  runAnalyze();
});
$("analyze").addEventListener("click", runAnalyze);
$("dualize").addEventListener("click", runDualize);
$("witness").addEventListener("click", runWitness);
$("input").value = PRESETS.intro;
runAnalyze();
