// The demo surface: a text box, a row of suggestion chips, an error
// banner. Everything the page does goes through the service client
// passed in, so tests can drive it with a mock.

import { Suggestion, SuggestionService } from "./api.js";
import { debounce } from "./debounce.js";
import { RequestGate } from "./session.js";

export interface DemoOptions {
  k?: number;
  debounceMs?: number;
}

export interface DemoHandles {
  input: HTMLTextAreaElement;
  chipRow: HTMLDivElement;
  banner: HTMLDivElement;
  /** settles once health is applied and the first suggestions arrived */
  ready: Promise<void>;
}

export function mountDemo(
  root: HTMLElement,
  client: SuggestionService,
  options: DemoOptions = {},
): DemoHandles {
  const k = options.k ?? 5;
  const debounceMs = options.debounceMs ?? 150;

  const banner = document.createElement("div");
  banner.className = "banner";
  banner.hidden = true;

  const input = document.createElement("textarea");
  input.rows = 3;
  input.setAttribute("aria-label", "composed text");

  const chipRow = document.createElement("div");
  chipRow.className = "chips";
  chipRow.setAttribute("role", "list");

  root.append(banner, input, chipRow);

  const gate = new RequestGate();

  function showError(message: string): void {
    banner.textContent = message;
    banner.hidden = false;
    renderChips([]);
  }

  function clearError(): void {
    banner.hidden = true;
    banner.textContent = "";
  }

  function renderChips(suggestions: Suggestion[]): void {
    chipRow.textContent = "";
    for (const s of suggestions) {
      const chip = document.createElement("button");
      chip.type = "button";
      chip.className = "chip";
      chip.setAttribute("role", "listitem");
      chip.textContent = s.word;
      chip.title = s.score.toFixed(6);
      chip.addEventListener("click", () => pickWord(s.word));
      chipRow.append(chip);
    }
  }

  function send(text: string, seq: number): Promise<void> {
    return client
      .predict(text, k)
      .then(
        (res) => {
          if (gate.shouldRender(seq)) {
            clearError();
            renderChips(res.suggestions);
          }
        },
        () => {
          if (gate.shouldRender(seq)) {
            showError("suggestion service unreachable");
          }
        },
      )
      .then(() => {
        const queued = gate.settle(seq);
        if (queued !== null) {
          request(queued);
        }
      });
  }

  function request(text: string): void {
    const seq = gate.begin(text);
    if (seq !== null) {
      void send(text, seq);
    }
  }

  const scheduled = debounce((text: string) => request(text), debounceMs);

  input.addEventListener("input", () => scheduled(input.value));

  function pickWord(word: string): void {
    const base = input.value;
    const glue = base === "" || /\s$/.test(base) ? "" : " ";
    input.value = base + glue + word + " ";
    input.focus();
    input.setSelectionRange(input.value.length, input.value.length);
    scheduled(input.value);
  }

  const ready = client
    .health()
    .then(
      (h) => {
        root.dir = h.script_mode === "arabic-script" ? "rtl" : "ltr";
      },
      () => {
        showError("suggestion service unreachable");
      },
    )
    .then(() => {
      // empty context: sentence-opening suggestions
      request(input.value);
    });

  return { input, chipRow, banner, ready };
}
