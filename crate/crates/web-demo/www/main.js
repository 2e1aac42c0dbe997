import init, { sublevelView, moebiusL2Curve, boundSweep } from "../pkg/diskbound_web.js";

const $ = (id) => document.getElementById(id);

function zeros() {
  return new Float64Array(
    $("zeros").value
      .split(",")
      .map((s) => s.trim())
      .filter((s) => s.length > 0)
      .flatMap((s) => {
        const [re, im = "0"] = s.split(":");
        return [Number(re), Number(im)];
      }),
  );
}

function drawSublevel() {
  const t = Number($("t").value);
  $("t-value").textContent = t.toFixed(3);
  const n = Number($("resolution").value);
  try {
    const view = sublevelView(zeros(), Number($("phase").value), t, n);
    const canvas = $("sublevel");
    canvas.width = n;
    canvas.height = n;
    const image = new ImageData(new Uint8ClampedArray(view.rgba()), n, n);
    canvas.getContext("2d").putImageData(image, 0, 0);
    $("sublevel-info").textContent =
      `degree ${view.degree}, components ${view.components}\n` +
      `area ${view.area.toFixed(5)}, z^d area ${view.reference_area.toFixed(5)}, ` +
      `bound ${view.bound.toFixed(5)}`;
    view.free();
  } catch (err) {
    $("sublevel-info").textContent = String(err);
  }
}

function drawCurve() {
  const data = moebiusL2Curve(200, 0.99);
  const canvas = $("curve");
  const ctx = canvas.getContext("2d");
  const [w, h, pad] = [canvas.width, canvas.height, 30];
  const [ylo, yhi] = [1.2, 1.8];
  const x = (a) => pad + a * (w - 2 * pad);
  const y = (v) => h - pad - ((v - ylo) / (yhi - ylo)) * (h - 2 * pad);
  ctx.clearRect(0, 0, w, h);
  ctx.strokeStyle = "#888";
  ctx.strokeRect(pad, pad, w - 2 * pad, h - 2 * pad);
  ctx.fillStyle = "#444";
  ctx.fillText("0", x(0) - 3, h - pad + 14);
  ctx.fillText("1", x(1) - 3, h - pad + 14);
  ctx.fillText(String(ylo), 2, y(ylo) + 3);
  ctx.fillText(String(yhi), 2, y(yhi) + 3);
  ctx.strokeStyle = "#1e3c8c";
  ctx.beginPath();
  for (let i = 0; i < data.length; i += 2) {
    const [px, py] = [x(data[i]), y(data[i + 1])];
    if (i === 0) ctx.moveTo(px, py);
    else ctx.lineTo(px, py);
  }
  ctx.stroke();
  $("curve-info").textContent =
    `h(0) = ${data[1].toFixed(6)}, h(0.99) = ${data[data.length - 1].toFixed(6)}`;
}

function runSweep() {
  const ts = new Float64Array([0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9]);
  try {
    const rows = JSON.parse(
      boundSweep(zeros(), Number($("phase").value), ts, Number($("samples").value), BigInt($("seed").value)),
    );
    $("sweep-out").textContent = rows
      .map((r) =>
        `t=${r.t.toFixed(2)}  measured ${r.measured_sublevel.value.toFixed(5)} ± ` +
        `${r.measured_sublevel.stderr.toFixed(5)}  bound ${r.sharp_bound.toFixed(5)}  ${r.verdict}`)
      .join("\n");
  } catch (err) {
    $("sweep-out").textContent = String(err);
  }
}

await init();
for (const id of ["zeros", "phase", "t", "resolution"]) $(id).addEventListener("input", drawSublevel);
$("sweep").addEventListener("click", runSweep);
drawSublevel();
drawCurve();
