import type { FormState, Question, Submission } from "./types.js";

export function createFormState(questions: Question[]): FormState {
  return { questions, answers: new Map(), submission: { kind: "idle" } };
}

export function setAnswer(state: FormState, attributeIndex: number, value: number): FormState {
  const question = state.questions.find((q) => q.attribute_index === attributeIndex);
  if (!question) {
    throw new RangeError(`unknown attribute ${attributeIndex}`);
  }
  if (!Number.isInteger(value) || value < question.scale.min || value > question.scale.max) {
    throw new RangeError(
      `answer ${value} for attribute ${attributeIndex} outside ${question.scale.min}..${question.scale.max}`,
    );
  }
  const answers = new Map(state.answers);
  answers.set(attributeIndex, value);
  return { ...state, answers };
}

export function allAnswered(state: FormState): boolean {
  return (
    state.questions.length > 0 &&
    state.questions.every((q) => state.answers.has(q.attribute_index))
  );
}

// submit is legal only with a complete form and no request in flight
export function canSubmit(state: FormState): boolean {
  return allAnswered(state) && state.submission.kind !== "pending";
}

export function withSubmission(state: FormState, submission: Submission): FormState {
  return { ...state, submission };
}

export function answersPayload(state: FormState): Record<number, number> {
  const payload: Record<number, number> = {};
  for (const [index, value] of state.answers) {
    payload[index] = value;
  }
  return payload;
}
