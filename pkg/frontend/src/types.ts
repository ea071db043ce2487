export interface Question {
  attribute_index: number;
  text: string;
  scale: { min: number; max: number };
}

export interface ExplanationEntry {
  attribute_index: number;
  weight: number;
  instance_value: number;
}

export interface PredictResponse {
  label: string;
  class_code: number;
  probability_divorced: number;
  explanation: ExplanationEntry[] | null;
}

export type Submission =
  | { kind: "idle" }
  | { kind: "pending" }
  | { kind: "result"; response: PredictResponse }
  | { kind: "error"; message: string; attributeIndex?: number };

export interface FormState {
  questions: Question[];
  answers: Map<number, number>;
  submission: Submission;
}
