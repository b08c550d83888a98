// Mock service for driving the UI without a network.

import { HealthResponse, PredictResponse, SuggestionService } from "../src/api.js";
import { HEALTH_LATIN, PREDICT_GOLDEN } from "./fixtures.js";

export interface Deferred<T> {
  promise: Promise<T>;
  resolve(value: T): void;
  reject(reason?: unknown): void;
}

export function deferred<T>(): Deferred<T> {
  let resolve!: (value: T) => void;
  let reject!: (reason?: unknown) => void;
  const promise = new Promise<T>((res, rej) => {
    resolve = res;
    reject = rej;
  });
  return { promise, resolve, reject };
}

/** Answers from the golden table immediately; records every call. */
export class FakeService implements SuggestionService {
  calls: string[] = [];
  healthResponse: HealthResponse = HEALTH_LATIN;

  predict(text: string): Promise<PredictResponse> {
    this.calls.push(text);
    const hit = PREDICT_GOLDEN[text];
    if (hit === undefined) {
      return Promise.reject(new Error(`no golden response for ${JSON.stringify(text)}`));
    }
    return Promise.resolve(hit);
  }

  health(): Promise<HealthResponse> {
    return Promise.resolve(this.healthResponse);
  }
}

/** Never answers on its own: each predict call hands back a deferred. */
export class SlowService implements SuggestionService {
  pending: Array<{ text: string; answer: Deferred<PredictResponse> }> = [];
  healthResponse: HealthResponse = HEALTH_LATIN;

  predict(text: string): Promise<PredictResponse> {
    const answer = deferred<PredictResponse>();
    this.pending.push({ text, answer });
    return answer.promise;
  }

  health(): Promise<HealthResponse> {
    return Promise.resolve(this.healthResponse);
  }
}

export function chipWords(chipRow: HTMLElement): string[] {
  return Array.from(chipRow.querySelectorAll("button.chip"))
    .map((b) => b.textContent ?? "");
}

export async function flushTasks(): Promise<void> {
  // drain the microtask queue a few levels deep
  for (let i = 0; i < 8; i++) {
    await Promise.resolve();
  }
}
