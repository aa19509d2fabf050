// DOM wiring for index.html: binds the UiSession controller to the page.

import { UiSession } from "./session";
import { highlightPieces } from "./highlight";

const session = new UiSession();

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) {
    throw new Error(`missing element #${id}`);
  }
  return node as T;
}

const sourceInput = el<HTMLTextAreaElement>("source");
const translateButton = el<HTMLButtonElement>("translate");
const outputPanel = el<HTMLDivElement>("output");
const traceToggle = el<HTMLInputElement>("trace-toggle");
const correctionInput = el<HTMLTextAreaElement>("correction");
const confirmUnchanged = el<HTMLInputElement>("confirm-unchanged");
const contributeButton = el<HTMLButtonElement>("contribute");
const banner = el<HTMLDivElement>("banner");

function renderOutput(): void {
  outputPanel.textContent = "";
  if (session.machineOutput === null) {
    outputPanel.textContent = "—";
    return;
  }
  if (!traceToggle.checked) {
    outputPanel.textContent = session.machineOutput;
    return;
  }
  for (const piece of highlightPieces(session.trace)) {
    const span = document.createElement("span");
    span.textContent = piece.text;
    span.className = piece.cssClass;
    span.title = piece.title;
    outputPanel.appendChild(span);
    outputPanel.appendChild(document.createTextNode(" "));
  }
}

function renderBanner(): void {
  banner.className = "";
  if (session.error) {
    banner.textContent = session.error;
    banner.className = "error";
  } else if (session.status === "ACCEPTED" && session.lastContributionId !== null) {
    banner.textContent = `Gracias — stored as contribution #${session.lastContributionId}`;
    banner.className = "success";
  } else if (session.status === "SUBMITTING") {
    banner.textContent = "Submitting…";
  } else {
    banner.textContent = "";
  }
}

function render(): void {
  translateButton.disabled = !session.canTranslate;
  contributeButton.disabled =
    !session.canContribute(confirmUnchanged.checked) || session.status === "SUBMITTING";
  correctionInput.value = session.editBuffer;
  renderOutput();
  renderBanner();
}

sourceInput.addEventListener("input", () => {
  session.setSource(sourceInput.value);
  render();
});

traceToggle.addEventListener("change", render);

correctionInput.addEventListener("input", () => {
  session.setEditBuffer(correctionInput.value);
  render();
});

confirmUnchanged.addEventListener("change", render);

translateButton.addEventListener("click", () => {
  void session.translate().then(render);
  render();
});

contributeButton.addEventListener("click", () => {
  void session.contribute(confirmUnchanged.checked).then(render);
  render();
});

render();
