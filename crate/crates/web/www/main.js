import init, {
  decompose, score, map,
  bundled_practice, bundled_framework, bundled_lexicon, bundled_annotations,
} from "./pkg/essencemap_web.js";

const $ = (id) => document.getElementById(id);

function show(target, run) {
  const out = $(target);
  try {
    out.textContent = run();
    out.className = "";
  } catch (err) {
    out.textContent = String(err);
    out.className = "error";
  }
}

function describe(d) {
  const part = (name, p) => `${name}: ${p.tokens.join(" ")}  ->  {${p.canonical.join(", ")}}`;
  const lines = [part("subject", d.subject), part("predicate", d.predicate), part("object", d.object)];
  if (d.verbless) lines.push("no verb found, predicate ignored");
  return lines.join("\n");
}

function runSplit() {
  show("spo-out", () => describe(JSON.parse(decompose($("spo-text").value, $("spo-owner").value, $("lexicon").value))));
}

function runPair() {
  show("pair-out", () => {
    const r = JSON.parse(score(
      $("pair-left").value, $("pair-lowner").value,
      $("pair-right").value, $("pair-rowner").value,
      $("lexicon").value,
    ));
    const marks = ["subject", "predicate", "object"].map((n, i) => `${n} ${r.similar[i] ? "similar" : "different"}`);
    return `level ${r.level}  (${marks.join(", ")})\n\nleft\n${describe(r.left)}\n\nright\n${describe(r.right)}`;
  });
}

function runMap() {
  show("map-out", () => map(
    $("practice").value, $("framework").value, $("lexicon").value, $("annotations").value,
    $("mode").value, Number($("threshold").value), $("format").value,
  ));
}

await init();
$("practice").value = bundled_practice();
$("framework").value = bundled_framework();
$("lexicon").value = bundled_lexicon();
$("annotations").value = bundled_annotations();

$("spo-run").addEventListener("click", runSplit);
$("pair-run").addEventListener("click", runPair);
$("map-run").addEventListener("click", runMap);
$("threshold").addEventListener("input", () => {
  $("threshold-value").textContent = $("threshold").value;
  runMap();
});
$("mode").addEventListener("change", runMap);
$("format").addEventListener("change", runMap);

runSplit();
runPair();
runMap();
