import type { PredictResponse, Question } from "./types.js";

export class ApiError extends Error {
  status: number;
  detail: string;

  constructor(status: number, detail: string) {
    super(`${status}: ${detail}`);
    this.status = status;
    this.detail = detail;
  }
}

async function extractDetail(res: Response): Promise<string> {
  try {
    const body = (await res.json()) as { detail?: unknown };
    if (typeof body.detail === "string") return body.detail;
    // pydantic validation errors arrive as a list of objects
    if (Array.isArray(body.detail)) {
      return body.detail
        .map((item) => (typeof item?.msg === "string" ? item.msg : JSON.stringify(item)))
        .join("; ");
    }
  } catch {
    // fall through to the generic message
  }
  return `request failed with status ${res.status}`;
}

export async function fetchQuestions(base = ""): Promise<Question[]> {
  const res = await fetch(`${base}/api/questions`);
  if (!res.ok) {
    throw new ApiError(res.status, await extractDetail(res));
  }
  return (await res.json()) as Question[];
}

export async function postPredict(
  answers: Record<number, number>,
  base = "",
): Promise<PredictResponse> {
  const res = await fetch(`${base}/api/predict`, {
    method: "POST",
    headers: { "Content-Type": "application/json" },
    body: JSON.stringify({ answers, explain: true }),
  });
  if (!res.ok) {
    throw new ApiError(res.status, await extractDetail(res));
  }
  return (await res.json()) as PredictResponse;
}
