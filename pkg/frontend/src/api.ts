// Thin client for the suggestion service. Only /api/predict and
// /api/health are used; the demo has no other coupling to the backend.

export interface Suggestion {
  word: string;
  score: number;
  matched_order: number;
}

export interface PredictResponse {
  suggestions: Suggestion[];
  model_id: string;
  elapsed_micros: number;
}

export interface HealthResponse {
  status: string;
  model_id: string;
  orders: number;
  vocab_size: number;
  script_mode: string;
}

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export interface SuggestionService {
  predict(text: string, k?: number): Promise<PredictResponse>;
  health(): Promise<HealthResponse>;
}

export class ServiceClient implements SuggestionService {
  private readonly fetchFn: FetchLike;

  constructor(private readonly baseUrl: string = "", fetchFn?: FetchLike) {
    // bind so a bare window.fetch does not lose its receiver
    this.fetchFn = fetchFn ?? ((input, init) => fetch(input, init));
  }

  async predict(text: string, k = 5): Promise<PredictResponse> {
    const res = await this.fetchFn(`${this.baseUrl}/api/predict`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ text, k }),
    });
    if (!res.ok) {
      throw new Error(`predict failed: ${res.status}`);
    }
    return (await res.json()) as PredictResponse;
  }

  async health(): Promise<HealthResponse> {
    const res = await this.fetchFn(`${this.baseUrl}/api/health`);
    if (!res.ok) {
      throw new Error(`health failed: ${res.status}`);
    }
    return (await res.json()) as HealthResponse;
  }
}
