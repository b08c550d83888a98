"""Regenerate the bundled synthetic sample corpus.

Deterministic for a fixed seed: a ~50k-token corpus over an ~800-word
vocabulary, where each next word usually depends on the previous two
words (via a fixed hash into three weighted candidates) and sometimes
on the previous word alone. That leaves real headroom between orders
when the corpus is evaluated, without shipping any scraped text.

Usage: python3 scripts/make_sample_corpus.py [OUTPUT]
"""
from __future__ import annotations

import random
import sys
from pathlib import Path

SEED = 20260822
VOCAB_SIZE = 800
TARGET_TOKENS = 50_000
WEIGHTS = (0.6, 0.3, 0.1)

_ONSETS = ["b", "d", "g", "h", "j", "k", "l", "m", "n", "p", "r", "s",
           "t", "v", "x", "z", "br", "dr", "gr", "kr", "sl", "st", "tr",
           "sp", "pl", "kl"]
_NUCLEI = ["a", "e", "i", "o", "u", "ai", "au", "ei", "ou"]
_CODAS = ["", "n", "r", "s", "t", "l", "m", "k"]


def build_vocabulary() -> list[str]:
    words = []
    seen = set()
    for onset in _ONSETS:
        for nucleus in _NUCLEI:
            for coda in _CODAS:
                for suffix in ("", "a", "en"):
                    word = onset + nucleus + coda + suffix
                    if word not in seen:
                        seen.add(word)
                        words.append(word)
                    if len(words) == VOCAB_SIZE:
                        return words
    raise AssertionError("syllable pool too small")


def pair_candidates(prev2: int, prev1: int) -> list[int]:
    h = (prev2 * 7919 + prev1 * 104729 + 12345) % VOCAB_SIZE
    return [h, (h * 31 + 7) % VOCAB_SIZE, (h * 17 + 3) % VOCAB_SIZE]


def unigram_candidates(prev1: int) -> list[int]:
    h = (prev1 * 131 + 977) % VOCAB_SIZE
    return [h, (h * 29 + 11) % VOCAB_SIZE, (h * 13 + 5) % VOCAB_SIZE]


def _pick(rng: random.Random, candidates: list[int]) -> int:
    roll = rng.random()
    if roll < WEIGHTS[0]:
        return candidates[0]
    if roll < WEIGHTS[0] + WEIGHTS[1]:
        return candidates[1]
    return candidates[2]


def generate(seed: int = SEED, target_tokens: int = TARGET_TOKENS) -> str:
    rng = random.Random(seed)
    words = build_vocabulary()
    lines = []
    tokens = 0
    while tokens < target_tokens:
        length = rng.randint(5, 12)
        prev2 = rng.randrange(VOCAB_SIZE)
        prev1 = rng.randrange(64)  # few distinct sentence openers
        sentence = [prev1]
        while len(sentence) < length:
            if rng.random() < 0.7:
                candidates = pair_candidates(prev2, prev1)
            else:
                candidates = unigram_candidates(prev1)
            nxt = _pick(rng, candidates)
            sentence.append(nxt)
            prev2, prev1 = prev1, nxt
        tokens += len(sentence)
        lines.append(" ".join(words[i] for i in sentence) + ".")
    return "\n".join(lines) + "\n"


def main() -> int:
    default = (Path(__file__).resolve().parents[1] / "src" / "nextword"
               / "data" / "samples" / "sample50k.txt")
    output = Path(sys.argv[1]) if len(sys.argv) > 1 else default
    text = generate()
    output.parent.mkdir(parents=True, exist_ok=True)
    output.write_text(text, encoding="utf-8")
    token_count = sum(len(line.split()) for line in text.splitlines())
    print(f"wrote {output}: {len(text.splitlines())} sentences, "
          f"{token_count} tokens")
    return 0


if __name__ == "__main__":
    sys.exit(main())
