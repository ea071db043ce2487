import type { ExplanationEntry, FormState, PredictResponse, Question } from "./types.js";
import { canSubmit } from "./state.js";

const SCALE_ANCHORS = ["0 = never / strongly disagree", "4 = always / strongly agree"];

export function escapeHtml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

// detail strings cite the offending 1-based attribute index, e.g.
// "answer 9 for attribute 22 outside 0..4"
export function attributeFromDetail(detail: string): number | undefined {
  const match = detail.match(/attribute (\d+)/);
  return match ? Number(match[1]) : undefined;
}

function questionRow(q: Question, selected: number | undefined, fieldError?: string): string {
  const options = [];
  for (let v = q.scale.min; v <= q.scale.max; v++) {
    const checked = selected === v ? " checked" : "";
    options.push(`
      <label class="dps-option">
        <input type="radio" name="attr-${q.attribute_index}" value="${v}"${checked}>
        <span>${v}</span>
      </label>`);
  }
  const error = fieldError
    ? `<p class="dps-field-error" role="alert">${escapeHtml(fieldError)}</p>`
    : "";
  return `
    <fieldset class="dps-question" data-attribute="${q.attribute_index}">
      <legend>${escapeHtml(q.text)}</legend>
      <div class="dps-options">${options.join("")}</div>
      ${error}
    </fieldset>`;
}

export function renderForm(state: FormState): string {
  if (state.questions.length === 0) {
    return `<p class="dps-empty">No questions are available from the service.</p>`;
  }
  let fieldErrorIndex: number | undefined;
  let fieldErrorText = "";
  let banner = "";
  if (state.submission.kind === "error") {
    fieldErrorIndex = state.submission.attributeIndex;
    if (fieldErrorIndex === undefined) {
      banner = `<div class="dps-banner" role="alert">${escapeHtml(state.submission.message)}</div>`;
    } else {
      fieldErrorText = state.submission.message;
    }
  }
  const rows = state.questions
    .map((q) =>
      questionRow(
        q,
        state.answers.get(q.attribute_index),
        q.attribute_index === fieldErrorIndex ? fieldErrorText : undefined,
      ),
    )
    .join("");
  const pending = state.submission.kind === "pending";
  const disabled = canSubmit(state) ? "" : " disabled";
  return `
    ${banner}
    <p class="dps-legend">${SCALE_ANCHORS.join(" &hellip; ")}</p>
    <div class="dps-questions">${rows}</div>
    <button type="submit" id="dps-submit"${disabled}>${pending ? "Predicting…" : "Predict"}</button>`;
}

export function renderGauge(probabilityDivorced: number): string {
  const pct = Math.round(probabilityDivorced * 100);
  return `
    <div class="dps-gauge" data-percent="${pct}">
      <div class="dps-gauge-track">
        <div class="dps-gauge-fill" style="width:${pct}%"></div>
      </div>
      <span class="dps-gauge-label">${pct}%</span>
    </div>`;
}

export function renderBars(
  entries: ExplanationEntry[],
  questionText: (attributeIndex: number) => string,
): string {
  const ordered = [...entries].sort(
    (a, b) => Math.abs(b.weight) - Math.abs(a.weight) || a.attribute_index - b.attribute_index,
  );
  const maxAbs = Math.max(...ordered.map((e) => Math.abs(e.weight)), 1e-12);
  const rows = ordered.map((e) => {
    const width = Math.round((Math.abs(e.weight) / maxAbs) * 100);
    const side = e.weight >= 0 ? "divorced" : "married";
    return `
      <div class="dps-bar" data-attribute="${e.attribute_index}" data-weight="${e.weight}">
        <div class="dps-bar-text">${escapeHtml(questionText(e.attribute_index))}</div>
        <div class="dps-bar-lane dps-bar-lane--${side}">
          <div class="dps-bar-fill" style="width:${width}%"></div>
        </div>
        <span class="dps-bar-value">${e.weight >= 0 ? "+" : ""}${e.weight.toFixed(4)}</span>
      </div>`;
  });
  return `<div class="dps-bars">${rows.join("")}</div>`;
}

export function renderResult(
  response: PredictResponse,
  questionText: (attributeIndex: number) => string,
): string {
  const verdictClass = `dps-verdict dps-verdict--${response.label === "divorced" ? "divorced" : "married"}`;
  const bars = response.explanation
    ? renderBars(response.explanation, questionText)
    : "";
  const explanationBlock = response.explanation
    ? `<h3>Why</h3>
       <p class="dps-bars-hint">bars toward "divorced" push the prediction up, toward "married" pull it down</p>
       ${bars}`
    : "";
  return `
    <section class="dps-result">
      <h2 class="${verdictClass}">${escapeHtml(response.label)}</h2>
      <p>probability of divorce</p>
      ${renderGauge(response.probability_divorced)}
      ${explanationBlock}
    </section>`;
}
