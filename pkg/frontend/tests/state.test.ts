import { describe, expect, it } from "vitest";

import {
  allAnswered,
  answersPayload,
  canSubmit,
  createFormState,
  setAnswer,
  withSubmission,
} from "../src/state.js";
import type { Question } from "../src/types.js";

function questions(n: number): Question[] {
  return Array.from({ length: n }, (_, i) => ({
    attribute_index: i + 1,
    text: `question ${i + 1}`,
    scale: { min: 0, max: 4 },
  }));
}

describe("form state", () => {
  it("starts unanswered and not submittable", () => {
    const state = createFormState(questions(3));
    expect(allAnswered(state)).toBe(false);
    expect(canSubmit(state)).toBe(false);
  });

  it("submit enabled only when every question is answered", () => {
    let state = createFormState(questions(3));
    state = setAnswer(state, 1, 0);
    state = setAnswer(state, 2, 4);
    expect(canSubmit(state)).toBe(false);
    state = setAnswer(state, 3, 2);
    expect(canSubmit(state)).toBe(true);
  });

  it("an empty form is never submittable", () => {
    expect(canSubmit(createFormState([]))).toBe(false);
  });

  it("constrains answers to the 5-point control", () => {
    const state = createFormState(questions(1));
    expect(() => setAnswer(state, 1, 5)).toThrow(RangeError);
    expect(() => setAnswer(state, 1, -1)).toThrow(RangeError);
    expect(() => setAnswer(state, 1, 2.5)).toThrow(RangeError);
    expect(() => setAnswer(state, 9, 2)).toThrow(RangeError);
  });

  it("a pending submission blocks further submits", () => {
    let state = createFormState(questions(1));
    state = setAnswer(state, 1, 3);
    expect(canSubmit(state)).toBe(true);
    state = withSubmission(state, { kind: "pending" });
    expect(canSubmit(state)).toBe(false);
  });

  it("re-answering overwrites without mutating the old state", () => {
    const before = setAnswer(createFormState(questions(1)), 1, 1);
    const after = setAnswer(before, 1, 4);
    expect(before.answers.get(1)).toBe(1);
    expect(after.answers.get(1)).toBe(4);
  });

  it("payload maps attribute index to value", () => {
    let state = createFormState(questions(2));
    state = setAnswer(state, 1, 0);
    state = setAnswer(state, 2, 3);
    expect(answersPayload(state)).toEqual({ 1: 0, 2: 3 });
  });
});
