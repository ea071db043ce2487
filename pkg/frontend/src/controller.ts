import { ApiError, fetchQuestions, postPredict } from "./api.js";
import { attributeFromDetail, escapeHtml, renderForm, renderResult } from "./render.js";
import {
  allAnswered,
  answersPayload,
  createFormState,
  setAnswer,
  withSubmission,
} from "./state.js";
import type { FormState } from "./types.js";

export interface ControllerHooks {
  fetchQuestions: typeof fetchQuestions;
  postPredict: typeof postPredict;
}

const LIVE_HOOKS: ControllerHooks = { fetchQuestions, postPredict };

export class FormController {
  state: FormState;
  private formEl: HTMLElement;
  private resultEl: HTMLElement;
  private hooks: ControllerHooks;

  constructor(formEl: HTMLElement, resultEl: HTMLElement, hooks: ControllerHooks = LIVE_HOOKS) {
    this.state = createFormState([]);
    this.formEl = formEl;
    this.resultEl = resultEl;
    this.hooks = hooks;
  }

  async load(): Promise<void> {
    try {
      const questions = await this.hooks.fetchQuestions();
      this.state = createFormState(questions);
    } catch (err) {
      // no partial form on a failed load: keep zero questions, show the banner
      const message = err instanceof Error ? err.message : String(err);
      this.state = withSubmission(createFormState([]), { kind: "error", message });
      this.formEl.innerHTML = `
        <div class="dps-banner" role="alert">Could not load the questionnaire (${escapeHtml(message)}).</div>
        <button type="button" id="dps-retry">Retry</button>`;
      return;
    }
    this.paintForm();
  }

  questionText(attributeIndex: number): string {
    const q = this.state.questions.find((item) => item.attribute_index === attributeIndex);
    return q ? q.text : `attribute ${attributeIndex}`;
  }

  answerChanged(attributeIndex: number, value: number): void {
    this.state = setAnswer(this.state, attributeIndex, value);
    // a fresh answer clears any stale error and re-evaluates the submit gate
    if (this.state.submission.kind === "error") {
      this.state = withSubmission(this.state, { kind: "idle" });
    }
    this.paintForm();
  }

  async submit(): Promise<void> {
    if (!allAnswered(this.state) || this.state.submission.kind === "pending") {
      return;
    }
    const payload = answersPayload(this.state);
    this.state = withSubmission(this.state, { kind: "pending" });
    this.paintForm();
    try {
      const response = await this.hooks.postPredict(payload);
      this.state = withSubmission(this.state, { kind: "result", response });
      this.paintForm();
      this.resultEl.innerHTML = renderResult(response, (idx) => this.questionText(idx));
    } catch (err) {
      // entered answers survive every failure mode; only the banner changes
      if (err instanceof ApiError) {
        this.state = withSubmission(this.state, {
          kind: "error",
          message: err.detail,
          attributeIndex: attributeFromDetail(err.detail),
        });
      } else {
        this.state = withSubmission(this.state, {
          kind: "error",
          message: "Could not reach the prediction service. Your answers are kept.",
        });
      }
      this.paintForm();
    }
  }

  paintForm(): void {
    this.formEl.innerHTML = renderForm(this.state);
  }
}
