import init, {
  encode_text, decode_text, message_value,
  encode_cover, decode_cover, generate_key,
  position_entropy, capacity_bits,
} from "./pkg/permstego_wasm.js";

const $ = (id) => document.getElementById(id);

function show(el, fn) {
  try {
    el.textContent = fn();
    el.classList.remove("err");
  } catch (e) {
    el.textContent = String(e);
    el.classList.add("err");
  }
}

function updateText() {
  show($("msg-value"), () => message_value($("msg").value, ""));
  show($("msg-code"), () => encode_text($("msg").value, ""));
  show($("code-msg"), () => JSON.stringify(decode_text($("code").value, "")));
}

function coverArgs() {
  return [$("cover").value, $("sort").checked, $("key").value, $("sentinel").checked];
}

function drawEntropy() {
  const n = Number($("n").value);
  const samples = Math.max(100, Number($("samples").value) | 0);
  $("n-label").textContent = n;
  const h = position_entropy(n, samples, 1n);
  const canvas = $("plot");
  const ctx = canvas.getContext("2d");
  const ceiling = Math.log2(Math.max(n, 2));
  const pad = 30, w = canvas.width - 2 * pad, hgt = canvas.height - 2 * pad;
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  ctx.strokeStyle = "#aaa";
  ctx.setLineDash([4, 4]);
  ctx.beginPath();
  ctx.moveTo(pad, pad);
  ctx.lineTo(pad + w, pad);
  ctx.stroke();
  ctx.setLineDash([]);
  const bw = w / h.length;
  h.forEach((v, i) => {
    const bh = (v / ceiling) * hgt;
    ctx.fillStyle = i === 0 ? "#c0392b" : "#2c7fb8";
    ctx.fillRect(pad + i * bw + 2, pad + hgt - bh, bw - 4, bh);
    ctx.fillStyle = "#222";
    ctx.fillText(String(i), pad + i * bw + bw / 2 - 3, pad + hgt + 14);
  });
  ctx.fillText(`log2 n = ${ceiling.toFixed(3)}`, pad + 4, pad - 6);
  const total = h.reduce((a, b) => a + b, 0);
  $("entropy-summary").textContent =
    `total ${total.toFixed(3)} bits of ${(n * Math.log2(n)).toFixed(3)} (n log2 n); ` +
    `capacity log2 n! = ${capacity_bits(n).toFixed(3)} bits`;
}

await init();
$("msg").addEventListener("input", updateText);
$("code").addEventListener("input", updateText);
$("hide").addEventListener("click", () => {
  try {
    $("cover-out").value = encode_cover($("secret").value, ...coverArgs());
    $("cover-msg").textContent = "";
  } catch (e) {
    $("cover-msg").textContent = String(e);
  }
});
$("reveal").addEventListener("click", () => show($("cover-msg"), () => JSON.stringify(decode_cover($("cover-out").value, ...coverArgs()))));
$("keygen").addEventListener("click", () => {
  const n = $("cover").value.split("\n").filter((l) => l.trim() && !l.trim().startsWith("#")).length;
  $("key").value = generate_key(n, BigInt(Math.floor(Math.random() * 2 ** 32)));
});
$("n").addEventListener("input", drawEntropy);
$("samples").addEventListener("change", drawEntropy);
updateText();
drawEntropy();
