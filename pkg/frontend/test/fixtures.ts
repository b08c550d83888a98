// Golden service responses, captured verbatim from the Python service
// running the bundled five-sentence sample model. A chip click that
// refetches must render exactly what a direct /api/predict call returns
// for the new text, so these stand in for that direct call.

import { HealthResponse, PredictResponse } from "../src/api.js";

export const MODEL_ID = "ff3cc7c6-5g-26";

export const PREDICT_GOLDEN: Record<string, PredictResponse> = {
  "": {
    suggestions: [
      { word: "bo", score: 0.11538461538461539, matched_order: 1 },
      { word: "bazar", score: 0.07692307692307693, matched_order: 1 },
      { word: "ew", score: 0.07692307692307693, matched_order: 1 },
      { word: "ewan", score: 0.07692307692307693, matched_order: 1 },
      { word: "deçêt", score: 0.038461538461538464, matched_order: 1 },
    ],
    model_id: MODEL_ID,
    elapsed_micros: 42,
  },
  "bo": {
    suggestions: [
      { word: "bazar", score: 0.6666666666666666, matched_order: 2 },
      { word: "seyran", score: 0.3333333333333333, matched_order: 2 },
    ],
    model_id: MODEL_ID,
    elapsed_micros: 42,
  },
  "bo bazar ": {
    suggestions: [
      { word: "bo", score: 0.018461538461538467, matched_order: 1 },
      { word: "bazar", score: 0.012307692307692311, matched_order: 1 },
      { word: "ew", score: 0.012307692307692311, matched_order: 1 },
      { word: "ewan", score: 0.012307692307692311, matched_order: 1 },
      { word: "deçêt", score: 0.006153846153846156, matched_order: 1 },
    ],
    model_id: MODEL_ID,
    elapsed_micros: 42,
  },
};

export const HEALTH_LATIN: HealthResponse = {
  status: "ok",
  model_id: MODEL_ID,
  orders: 5,
  vocab_size: 16,
  script_mode: "latin-script",
};

export const HEALTH_ARABIC: HealthResponse = {
  ...HEALTH_LATIN,
  script_mode: "arabic-script",
};
